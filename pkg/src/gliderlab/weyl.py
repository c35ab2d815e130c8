"""The first Weyl algebra with exact PBW arithmetic and bounded analyses.

Elements are kept in the normal form  sum c_{a,b} x^a d^b  (x before d),
using the rewriting  d x = x d + 1.  Two filtrations are supported:

* ``"total"``   — deg x = deg d = 1 (total-degree filtration; the
  associated graded ring is Q[x, xi] with both symbols of degree 1);
* ``"order"``   — deg x = 0, deg d = 1 (operator-order filtration; the
  associated graded ring is Q[x][xi] with xi of degree 1).

Left-ideal membership and symbol ideals are computed degree-by-degree via
exact linear algebra, so every verdict carries the bound it holds for.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from gliderlab.ideals import Ideal
from gliderlab.linalg import Echelon
from gliderlab.poly import Polynomial

SYMBOL_CTX = ("x", "xi")

FILTRATIONS = ("total", "order")


class WeylElement:
    """An element of the first Weyl algebra in PBW normal form.

    ``terms`` maps pairs (a, b) — the exponents of x^a d^b — to nonzero
    Fractions.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        cleaned = {}
        if terms:
            for (a, b), c in terms.items():
                c = c if isinstance(c, Fraction) else Fraction(c)
                if c != 0:
                    cleaned[(a, b)] = c
        self.terms = cleaned

    @classmethod
    def zero(cls) -> "WeylElement":
        return cls()

    @classmethod
    def one(cls) -> "WeylElement":
        return cls({(0, 0): 1})

    @classmethod
    def x(cls, power: int = 1) -> "WeylElement":
        return cls({(power, 0): 1})

    @classmethod
    def d(cls, power: int = 1) -> "WeylElement":
        return cls({(0, power): 1})

    @classmethod
    def monomial(cls, a: int, b: int, coeff=1) -> "WeylElement":
        return cls({(a, b): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "WeylElement") -> "WeylElement":
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k, Fraction(0)) + c
            if s == 0:
                terms.pop(k, None)
            else:
                terms[k] = s
        return WeylElement(terms)

    def __neg__(self) -> "WeylElement":
        return WeylElement({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "WeylElement") -> "WeylElement":
        return self + (-other)

    def scale(self, c) -> "WeylElement":
        c = Fraction(c)
        return WeylElement({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return weyl_product(self, other)

    def __pow__(self, n: int) -> "WeylElement":
        out = WeylElement.one()
        for _ in range(n):
            out = weyl_product(out, self)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def degree(self, filtration: str) -> int:
        """Filtration degree; the zero element reports -1."""
        if not self.terms:
            return -1
        if filtration == "total":
            return max(a + b for a, b in self.terms)
        if filtration == "order":
            return max(b for _, b in self.terms)
        raise ValueError(f"unknown filtration {filtration!r}")

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms, key=lambda k: (k[0] + k[1], k[1], k[0]), reverse=True):
            c = self.terms[(a, b)]
            factors = []
            if a == 1:
                factors.append("x")
            elif a > 1:
                factors.append(f"x^{a}")
            if b == 1:
                factors.append("d")
            elif b > 1:
                factors.append(f"d^{b}")
            body = "*".join(factors) if factors else str(abs(c) if factors else c)
            if factors:
                if c == 1:
                    s = body
                elif c == -1:
                    s = f"-{body}"
                else:
                    s = f"{c}*{body}"
            else:
                s = str(c)
            if not parts:
                parts.append(s)
            elif s.startswith("-"):
                parts.append(f"- {s[1:]}")
            else:
                parts.append(f"+ {s}")
        return " ".join(parts)

    def __repr__(self):
        return f"WeylElement({self})"


def _d_times_x(b: int, a: int) -> WeylElement:
    """Normal form of d^b x^a from the commutation rule d x = x d + 1."""
    terms = {}
    for k in range(min(a, b) + 1):
        coeff = math.comb(a, k) * math.comb(b, k) * math.factorial(k)
        terms[(a - k, b - k)] = Fraction(coeff)
    return WeylElement(terms)


def weyl_product(u: WeylElement, v: WeylElement) -> WeylElement:
    """Product in the Weyl algebra, returned in PBW normal form."""
    out: dict = {}
    for (a1, b1), c1 in u.terms.items():
        for (a2, b2), c2 in v.terms.items():
            mid = _d_times_x(b1, a2)
            for (am, bm), cm in mid.terms.items():
                key = (a1 + am, b2 + bm)
                s = out.get(key, Fraction(0)) + c1 * c2 * cm
                if s == 0:
                    out.pop(key, None)
                else:
                    out[key] = s
    return WeylElement(out)


def weyl_symbol(u: WeylElement, filtration: str) -> Polynomial:
    """Top-degree part of ``u`` as a commutative polynomial in (x, xi)."""
    n = u.degree(filtration)
    if n < 0:
        return Polynomial.zero(SYMBOL_CTX)
    terms = {}
    for (a, b), c in u.terms.items():
        deg = a + b if filtration == "total" else b
        if deg == n:
            terms[(a, b)] = c
    return Polynomial(SYMBOL_CTX, terms)


def rees_fibers_check_weyl(samples: list, filtration: str) -> list:
    """Degreewise fiber consistency for the Weyl algebra blowup.

    For each sampled pair (u, v): the weight-(a+b) product specializes at 1
    to the algebra product, and at 0 to the symbol product — the symbol of
    ``u v`` when degrees add, zero otherwise.  Returns (label, ok) pairs.
    """
    out = []
    for u in samples:
        for v in samples:
            if u.is_zero() or v.is_zero():
                continue
            a, b = u.degree(filtration), v.degree(filtration)
            prod = weyl_product(u, v)
            if prod.is_zero() or prod.degree(filtration) < a + b:
                ok = weyl_symbol(u, filtration) * weyl_symbol(v, filtration) == 0
            else:
                ok = (weyl_symbol(u, filtration) * weyl_symbol(v, filtration)
                      == weyl_symbol(prod, filtration))
            out.append((f"({u})*({v})", ok))
    return out


class WeylLeftIdeal:
    """A left ideal of the Weyl algebra given by a finite generator list."""

    def __init__(self, gens: list):
        self.gens = [g for g in gens if not g.is_zero()]

    def __repr__(self):
        return f"WeylLeftIdeal({', '.join(str(g) for g in self.gens)})"


def _pbw_monomials(bound: int) -> list:
    """All (a, b) with a + b <= bound, ascending by total degree then b."""
    return [(a, b) for t in range(bound + 1) for b in range(t + 1) for a in [t - b]]


@dataclass
class MembershipWitness:
    """Outcome of a bounded left-ideal membership test."""

    member: bool
    bound: int
    cofactors: list = field(default_factory=list)  # parallel to the generators


def left_membership_bounded(f: WeylElement, ideal: WeylLeftIdeal, bound: int) -> MembershipWitness:
    """Decide whether f = sum p_i g_i with cofactors of total degree <= bound.

    A negative verdict only means no witness exists at this bound.
    """
    keyfn = lambda k: (k[0] + k[1], k[1], k[0])
    ech = Echelon(keyfn=keyfn, track=True)
    columns = []  # (gen index, monomial)
    for i, g in enumerate(ideal.gens):
        for mono in _pbw_monomials(bound):
            prod = weyl_product(WeylElement.monomial(*mono), g)
            columns.append((i, mono))
            ech.add(dict(prod.terms))
    coords = ech.express(dict(f.terms))
    if coords is None:
        return MembershipWitness(False, bound)
    cofactors = [WeylElement.zero() for _ in ideal.gens]
    for col, c in coords.items():
        i, mono = columns[col]
        cofactors[i] = cofactors[i] + WeylElement.monomial(*mono, coeff=c)
    return MembershipWitness(True, bound, cofactors)


@dataclass
class SymbolIdealReport:
    """Bounded associated-graded (symbol) ideal of a left ideal."""

    ideal: Ideal          # commutative ideal in Q[x, xi]
    filtration: str
    degree_bound: int
    cofactor_bound: int


def gr_left_ideal_bounded(ideal: WeylLeftIdeal, filtration: str, bound: int,
                          slack: int = 4) -> SymbolIdealReport:
    """Generators of the symbol ideal  { symbol(u) : u in I }  up to ``bound``.

    The degree-n piece of the symbol ideal is obtained by eliminating, within
    the span of all products (monomial cofactor) * generator with cofactor
    degree <= bound + slack, the coordinates of filtration degree > n; the
    top-degree parts of the surviving rows are exactly the degree-n symbols.
    """
    if filtration not in FILTRATIONS:
        raise ValueError(f"unknown filtration {filtration!r}")

    def fdeg(key):
        a, b = key
        return a + b if filtration == "total" else b

    # order PBW coordinates by filtration degree first: the echelon rows with
    # pivot degree n then have support entirely in degrees <= n
    keyfn = lambda k: (fdeg(k), k[0] + k[1], k[1], k[0])
    ech = Echelon(keyfn=keyfn)
    for g in ideal.gens:
        for mono in _pbw_monomials(bound + slack):
            ech.add(dict(weyl_product(WeylElement.monomial(*mono), g).terms))
    gens = []
    seen = Echelon(keyfn=lambda m: m)
    for row in ech.rows:
        elem = WeylElement(row)
        n = elem.degree(filtration)
        if n > bound:
            continue
        sym = weyl_symbol(elem, filtration)
        if seen.add(dict(sym.terms)):
            gens.append(sym)
    comm = Ideal(SYMBOL_CTX, gens or [Polynomial.zero(SYMBOL_CTX)])
    # present through the reduced Groebner basis for a stable generator list
    reduced = comm.groebner()
    comm = Ideal(SYMBOL_CTX, list(reduced) or [Polynomial.zero(SYMBOL_CTX)])
    return SymbolIdealReport(comm, filtration, bound, bound + slack)
