"""Filtered rings with finitely generated filtrations and bounded analyses.

A ``FilteredRing`` is a commutative presented ring R together with

* a subring S = F_0 generated by ``f0_gens``, and
* a list ``filt_gens`` generating F_1 as an S-module, with
  F_n = (F_1)^n (standard mode), or
* a finite tower of subrings S_0 ⊆ S_1 ⊆ ... ⊆ R (tower mode), where
  F_n = S_n below the top and F_n = R above it, F_{-1} = 0.

All membership questions are answered inside the finite-dimensional slice
of ambient total degree <= B by exact linear algebra; every answer is
relative to that bound.  The associated graded ring is presented, degree
by degree, as a quotient of a polynomial ring on one symbol per generator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from gliderlab.ideals import Ideal
from gliderlab.linalg import Echelon, span_equal
from gliderlab.poly import Polynomial, grevlex_key
from gliderlab.quotient import QuotientRingPresentation

DEFAULT_BOUND_UNIVARIATE = 12
DEFAULT_BOUND_MULTIVARIATE = 8


def default_bound(ring: QuotientRingPresentation) -> int:
    return DEFAULT_BOUND_UNIVARIATE if len(ring.ctx) == 1 else DEFAULT_BOUND_MULTIVARIATE


def _poly_vec(f: Polynomial) -> dict:
    return dict(f.terms)


class FilteredRing:
    """A presented commutative ring with a generated (or tower) filtration."""

    def __init__(self, ring: QuotientRingPresentation, f0_gens: list, filt_gens: list,
                 mode: str = "standard", tower_levels: Optional[list] = None,
                 bound: Optional[int] = None):
        self.ring = ring
        self.f0_gens = [ring.nf(g) for g in f0_gens]
        self.filt_gens = [ring.nf(g) for g in filt_gens]
        self.mode = mode
        self.tower_levels = tower_levels
        self.bound = bound if bound is not None else default_bound(ring)
        if mode == "tower":
            if not tower_levels:
                raise ValueError("tower mode needs at least one subring level")
            self.tower_levels = [[ring.nf(g) for g in lvl] for lvl in tower_levels]
        elif mode != "standard":
            raise ValueError(f"unknown filtration mode {mode!r}")
        self._closure_cache: dict = {}
        self._span_cache: dict = {}

    # ---- generator closures -------------------------------------------

    def _closure(self, B: int, max_weight: int) -> list:
        """All normal forms of products of generators, tagged with the number
        of positive-degree (filtration) generators used, pruned at ambient
        degree B.  Sorted by (weight, grevlex leading monomial)."""
        key = (B, max_weight)
        if key in self._closure_cache:
            return self._closure_cache[key]
        weighted = [(g, 0) for g in self.f0_gens] + [(g, 1) for g in self.filt_gens]
        best: dict = {Polynomial.one(self.ring.ctx): 0}
        frontier = [Polynomial.one(self.ring.ctx)]
        while frontier:
            nxt = []
            for state in frontier:
                w0 = best[state]
                for g, wg in weighted:
                    w = w0 + wg
                    if w > max_weight:
                        continue
                    prod = self.ring.nf(state * g)
                    if prod.is_zero() or prod.total_degree() > B:
                        continue
                    if prod in best and best[prod] <= w:
                        continue
                    best[prod] = w
                    nxt.append(prod)
            frontier = nxt
        items = sorted(best.items(), key=lambda kv: (kv[1], grevlex_key(kv[0].leading()[0])))
        self._closure_cache[key] = items
        return items

    def s_closure(self, B: int) -> list:
        """Products of F_0 generators only (spanning set of the subring slice)."""
        return [p for p, w in self._closure(B, 0)]

    def s_span(self, B: int) -> Echelon:
        key = ("s", B)
        if key not in self._span_cache:
            e = Echelon(keyfn=grevlex_key)
            for p in self.s_closure(B):
                e.add(_poly_vec(p))
            self._span_cache[key] = e
        return self._span_cache[key]

    def f_span(self, n: int, B: Optional[int] = None) -> Echelon:
        """Echelon span of F_n intersected with the degree <= B slice."""
        B = self.bound if B is None else B
        if self.mode == "tower":
            return self._tower_span(n, B)
        if n < 0:
            return Echelon(keyfn=grevlex_key)
        n = min(n, B)  # filtration generators have positive degree
        key = ("f", n, B)
        if key not in self._span_cache:
            e = Echelon(keyfn=grevlex_key)
            for p, w in self._closure(B, n):
                if w <= n:
                    e.add(_poly_vec(p))
            self._span_cache[key] = e
        return self._span_cache[key]

    def _tower_span(self, n: int, B: int) -> Echelon:
        if n < 0:
            return Echelon(keyfn=grevlex_key)
        n = min(n, len(self.tower_levels) - 1)
        key = ("tower", n, B)
        if key not in self._span_cache:
            sub = FilteredRing(self.ring, self.tower_levels[n], [], bound=B)
            self._span_cache[key] = sub.s_span(B)
        return self._span_cache[key]

    # ---- degrees ------------------------------------------------------

    def f_degree(self, r: Polynomial, B: Optional[int] = None) -> Optional[int]:
        """Least n with r in F_n, searched up to the bound; None if not found.

        The zero element reports None as well (it lies in every F_n).
        """
        B = self.bound if B is None else B
        r = self.ring.nf(r)
        if r.is_zero():
            return None
        top = len(self.tower_levels) - 1 if self.mode == "tower" else min(B, max(B, 0))
        for n in range(0, top + 1):
            if self.f_span(n, B).contains(_poly_vec(r)):
                return n
        return None

    def in_level(self, r: Polynomial, n: int, B: Optional[int] = None) -> bool:
        r = self.ring.nf(r)
        if r.is_zero():
            return True
        if n < 0:
            return False
        return self.f_span(n, B).contains(_poly_vec(r))


@dataclass
class SigmaSymbol:
    """A principal symbol: an element of the graded presentation with its degree.

    The zero symbol has ``poly = 0`` and ``degree = None``.
    """

    poly: Polynomial
    degree: Optional[int]

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __str__(self):
        return f"{self.poly} (degree {self.degree})"


class GradedPresentation:
    """Bounded presentation of the associated graded ring of a FilteredRing.

    One symbol of degree 0 per subring generator, one symbol of degree 1 per
    filtration generator; ``relations`` is the kernel of evaluation onto
    ⊕_{n<=degree_bound} F_n/F_{n-1}, valid up to that degree.
    """

    def __init__(self, fr: FilteredRing, degree_bound: int, B: int):
        self.fr = fr
        self.degree_bound = degree_bound
        self.B = B
        self.symbols = tuple(f"s{i}" for i in range(len(fr.f0_gens))) + tuple(
            f"e{i}" for i in range(len(fr.filt_gens))
        )
        self.symbol_degrees = {name: 0 for name in self.symbols if name.startswith("s")}
        self.symbol_degrees.update({name: 1 for name in self.symbols if name.startswith("e")})
        self._lifts = list(fr.f0_gens) + list(fr.filt_gens)
        self.relations = self._compute_relations()
        self.ring = QuotientRingPresentation(self.symbols, self.relations)

    # symbol monomial (exponent tuple) -> its filtration degree
    def _mono_degree(self, mono: tuple) -> int:
        k = len(self.fr.f0_gens)
        return sum(mono[k:])

    def _lift(self, mono: tuple) -> Polynomial:
        out = Polynomial.one(self.fr.ring.ctx)
        for g, e in zip(self._lifts, mono):
            for _ in range(e):
                out = self.fr.ring.nf(out * g)
        return out

    def _symbol_monomials(self, lift_cap: int) -> list:
        """Exponent tuples with filtration degree <= degree_bound and lift
        degree <= lift_cap, deterministically ordered."""
        out = []

        def rec(prefix, i):
            if i == len(self.symbols):
                mono = tuple(prefix)
                if self._mono_degree(mono) <= self.degree_bound:
                    lift = self._lift(mono)
                    if not lift.is_zero() and lift.total_degree() <= lift_cap:
                        out.append(mono)
                return
            for e in range(lift_cap + 1):
                prefix.append(e)
                if sum(prefix) <= lift_cap:
                    rec(prefix, i + 1)
                prefix.pop()

        rec([], 0)
        out.sort(key=grevlex_key)
        return out

    def _class_vec(self, r: Polynomial, n: int) -> dict:
        """Canonical vector of the class of r in F_n/F_{n-1} at the bound."""
        return self.fr.f_span(n - 1, self.B).residual(_poly_vec(self.fr.ring.nf(r)))

    def _compute_relations(self) -> Ideal:
        # keep a safety margin so truncation cannot fake a relation
        lift_cap = max(self.degree_bound, self.B - 4)
        monos = self._symbol_monomials(lift_cap)
        ech = Echelon(keyfn=lambda k: k, track=True)
        used = []
        rel_polys = []
        for mono in monos:
            n = self._mono_degree(mono)
            vec = self._class_vec(self._lift(mono), n)
            # tag coordinates with the degree so classes of different degrees
            # stay independent
            tagged = {(n, k): c for k, c in vec.items()}
            used.append(mono)
            if not ech.add(tagged):
                rel = ech.relations[-1]
                terms = {used[i]: c for i, c in rel.items()}
                rel_polys.append(Polynomial(self.symbols, terms))
        ideal = Ideal(self.symbols, rel_polys or [Polynomial.zero(self.symbols)])
        reduced = ideal.groebner()
        self._class_basis = ech
        self._class_monos = used
        return Ideal(self.symbols, list(reduced) or [Polynomial.zero(self.symbols)])

    def relation_strings(self) -> list:
        return [str(g) for g in self.relations.groebner()]

    def positive_degree_symbols(self) -> list:
        return [s for s in self.symbols if self.symbol_degrees[s] == 1]

    def sigma(self, r: Polynomial) -> Optional[SigmaSymbol]:
        """Principal symbol of r as an element of the presentation.

        Returns None when r's degree or class cannot be resolved at the bound.
        """
        r = self.fr.ring.nf(r)
        if r.is_zero():
            return SigmaSymbol(Polynomial.zero(self.symbols), None)
        n = self.fr.f_degree(r, self.B)
        if n is None:
            return None
        vec = self._class_vec(r, n)
        tagged = {(n, k): c for k, c in vec.items()}
        coords = self._class_basis.express(tagged)
        if coords is None:
            return None
        terms: dict = {}
        for i, c in coords.items():
            mono = self._class_monos[i]
            terms[mono] = terms.get(mono, Fraction(0)) + c
        poly = self.ring.nf(Polynomial(self.symbols, terms))
        return SigmaSymbol(poly, n)

    def sigma_product(self, a: SigmaSymbol, b: SigmaSymbol) -> SigmaSymbol:
        """Product in the graded ring; zero when either factor is zero."""
        if a.is_zero() or b.is_zero():
            return SigmaSymbol(Polynomial.zero(self.symbols), None)
        poly = self.ring.nf(a.poly * b.poly)
        if poly.is_zero():
            return SigmaSymbol(Polynomial.zero(self.symbols), None)
        return SigmaSymbol(poly, a.degree + b.degree)


def graded_presentation_bounded(fr: FilteredRing, degree_bound: int,
                                B: Optional[int] = None) -> GradedPresentation:
    """Present ⊕_{n<=degree_bound} F_n/F_{n-1} by generators and relations."""
    return GradedPresentation(fr, degree_bound, B if B is not None else fr.bound)


def sigma_map(gp: GradedPresentation, r: Polynomial) -> Optional[SigmaSymbol]:
    """Principal symbol map into the bounded graded presentation."""
    return gp.sigma(r)


@dataclass
class ReesElement:
    """A homogeneous element (r, n) of the blowup ring: r in F_n at weight n."""

    fr: FilteredRing
    element: Polynomial
    level: int

    def __post_init__(self):
        self.element = self.fr.ring.nf(self.element)
        if not self.fr.in_level(self.element, self.level):
            raise ValueError("element does not lie in the stated filtration level")

    def __mul__(self, other: "ReesElement") -> "ReesElement":
        return ReesElement(self.fr, self.fr.ring.nf(self.element * other.element),
                           self.level + other.level)

    def fiber_at_one(self) -> Polynomial:
        """Specializing the central parameter to 1 recovers the ring element."""
        return self.element

    def fiber_at_zero(self, gp: GradedPresentation) -> SigmaSymbol:
        """Specializing to 0 gives the class in F_n/F_{n-1}."""
        vec = gp._class_vec(self.element, self.level)
        if not vec:
            return SigmaSymbol(Polynomial.zero(gp.symbols), None)
        sym = gp.sigma(self.element)
        if sym is None or sym.degree != self.level:
            # degree dropped strictly below the weight: the fiber-0 class is 0
            return SigmaSymbol(Polynomial.zero(gp.symbols), None)
        return sym


@dataclass
class CheckOutcome:
    name: str
    ok: bool
    witness: str = ""


def rees_fibers_check(fr: FilteredRing, gp: GradedPresentation,
                      samples: Optional[list] = None) -> list:
    """Degreewise consistency of the two fibers of the blowup of the filtration.

    For sampled homogeneous pairs (r, a), (r', b): the weight-(a+b) product
    specializes at 1 to the ring product, and at 0 to the graded product —
    which must vanish precisely when the filtration degree drops below a+b.
    """
    if samples is None:
        samples = [g for g in fr.f0_gens + fr.filt_gens]
        samples += [fr.ring.nf(g * h) for g in fr.filt_gens for h in fr.filt_gens]
        samples = [s for s in samples if not s.is_zero()]
    outcomes = []
    for r in samples:
        for rp in samples:
            a = fr.f_degree(r)
            b = fr.f_degree(rp)
            if a is None or b is None:
                continue
            prod = fr.ring.nf(r * rp)
            label = f"({r})*({rp})"
            # fiber at 1: the product is the ring product by construction
            re = ReesElement(fr, r, a) * ReesElement(fr, rp, b)
            ok1 = fr.ring.equal(re.fiber_at_one(), prod)
            # fiber at 0: graded product vs class of the product at level a+b
            sa, sb = gp.sigma(r), gp.sigma(rp)
            if sa is None or sb is None:
                outcomes.append(CheckOutcome(f"fibers {label}", False, "symbol unresolved at bound"))
                continue
            graded = gp.sigma_product(sa, sb)
            cls = re.fiber_at_zero(gp)
            ok0 = graded.poly == cls.poly
            # submultiplicativity of the degree comes along for free
            dprod = fr.f_degree(prod) if not prod.is_zero() else None
            okd = dprod is None or dprod <= a + b
            outcomes.append(CheckOutcome(f"fibers {label}", ok1 and ok0 and okd,
                                         "" if ok1 and ok0 and okd else f"classes differ: {graded.poly} vs {cls.poly}"))
    return outcomes


class FilteredModule:
    """The ring as a filtered module, optionally refiltered by a glider chain.

    Without a chain the module filtration is the ring filtration.  With a
    descending chain M_0 ⊇ M_1 ⊇ ... the degree of ω is

    * -d for the largest d with ω in M_d, when ω is in M_0;
    * otherwise the least n >= 0 with ω in  Σ_j F_{n+j}·M_j.
    """

    def __init__(self, fr: FilteredRing, chain=None, depth: int = 0):
        self.fr = fr
        self.chain = chain  # gliders.Chain or None
        self.depth = depth if chain is None else chain.depth
        self._span_cache: dict = {}

    @property
    def ring(self) -> QuotientRingPresentation:
        return self.fr.ring

    def chain_span(self, d: int, B: Optional[int] = None) -> Echelon:
        """Bounded span of M_d (M_0 = the whole module when there is no chain)."""
        B = self.fr.bound if B is None else B
        key = ("chain", d, B)
        if key in self._span_cache:
            return self._span_cache[key]
        e = Echelon(keyfn=grevlex_key)
        if self.chain is None:
            gens = [Polynomial.one(self.ring.ctx)] if d <= 0 else []
        else:
            gens = self.chain.level_gens(d)
        for s in self.fr.s_closure(B):
            for g in gens:
                prod = self.ring.nf(s * g)
                if not prod.is_zero() and prod.total_degree() <= B:
                    e.add(_poly_vec(prod))
        self._span_cache[key] = e
        return e

    def pos_span(self, n: int, B: Optional[int] = None) -> Echelon:
        """Bounded span of  Σ_j F_{n+j}·M_j  (the degree-n piece, n >= 0)."""
        B = self.fr.bound if B is None else B
        key = ("pos", n, B)
        if key in self._span_cache:
            return self._span_cache[key]
        e = Echelon(keyfn=grevlex_key)
        max_j = self.depth if self.chain is not None else 0
        for j in range(0, max_j + 1):
            gens = ([Polynomial.one(self.ring.ctx)] if self.chain is None
                    else self.chain.level_gens(j))
            for p, w in self.fr._closure(B, min(n + j, B)):
                if w <= n + j:
                    for g in gens:
                        prod = self.ring.nf(p * g)
                        if not prod.is_zero() and prod.total_degree() <= B:
                            e.add(_poly_vec(prod))
        self._span_cache[key] = e
        return e

    def fdeg(self, omega: Polynomial, B: Optional[int] = None) -> Optional[int]:
        """Module filtration degree at the bound; None when unresolved."""
        B = self.fr.bound if B is None else B
        omega = self.ring.nf(omega)
        if omega.is_zero():
            return None
        vec = _poly_vec(omega)
        if self.chain is not None and self.chain_span(0, B).contains(vec):
            d = 0
            while d < self.depth and self.chain_span(d + 1, B).contains(vec):
                d += 1
            return -d
        if self.chain is None:
            return self.fr.f_degree(omega, B)
        for n in range(0, B + 1):
            if self.pos_span(n, B).contains(vec):
                return n
        return None


def glider_filtration(fr: FilteredRing, chain) -> FilteredModule:
    """Module filtration induced by a descending chain inside the ring."""
    return FilteredModule(fr, chain=chain)
