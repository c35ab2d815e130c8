"""Ideals of rational polynomial rings via Buchberger's algorithm.

Provides reduced Groebner bases (grevlex by default, block orders for
elimination), ideal membership, the four ideal combinations (sum, product,
intersection, colon), and radical membership via the auxiliary-variable
trick ``1 in I + (1 - t*f)``.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from gliderlab.poly import (
    OrderKey,
    Polynomial,
    elim_key,
    grevlex_key,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)


def groebner_normal_form(f: Polynomial, basis: list, key: OrderKey = grevlex_key) -> Polynomial:
    """Remainder of ``f`` on division by ``basis`` under the order ``key``.

    The remainder has no term divisible by a leading monomial of the basis;
    for a Groebner basis it is the canonical normal form.
    """
    if f.is_zero():
        return f
    leads = [(g.leading(key)) for g in basis]
    remainder: dict = {}
    work = dict(f.terms)
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for g, (lm, lc) in zip(basis, leads):
            if monomial_divides(lm, m):
                factor = Polynomial.from_monomial(f.ctx, monomial_div(m, lm), c / lc)
                sub = factor * g
                for m2, c2 in sub.terms.items():
                    if m2 == m:
                        continue
                    s = work.get(m2, Fraction(0)) - c2
                    if s == 0:
                        work.pop(m2, None)
                    else:
                        work[m2] = s
                break
        else:
            remainder[m] = c
    return Polynomial(f.ctx, remainder)


def exact_div(f: Polynomial, g: Polynomial) -> Polynomial:
    """Exact quotient f / g; raises ValueError when g does not divide f."""
    if g.is_zero():
        raise ValueError("division by zero polynomial")
    quot = Polynomial.zero(f.ctx)
    rem = f
    lm, lc = g.leading()
    while not rem.is_zero():
        m, c = rem.leading()
        if not monomial_divides(lm, m):
            raise ValueError("polynomial does not divide exactly")
        t = Polynomial.from_monomial(f.ctx, monomial_div(m, lm), c / lc)
        quot = quot + t
        rem = rem - t * g
    return quot


def spoly(f: Polynomial, g: Polynomial, key: OrderKey) -> Polynomial:
    """The S-polynomial cancelling the leading terms of f and g."""
    mf, cf = f.leading(key)
    mg, cg = g.leading(key)
    lcm = monomial_lcm(mf, mg)
    tf = Polynomial.from_monomial(f.ctx, monomial_div(lcm, mf), Fraction(1) / cf)
    tg = Polynomial.from_monomial(f.ctx, monomial_div(lcm, mg), Fraction(1) / cg)
    return tf * f - tg * g


def buchberger(gens: list, key: OrderKey = grevlex_key) -> list:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pairs with coprime leading monomials are skipped (Buchberger's first
    criterion); surviving pairs are processed in ascending lcm order.
    """
    G = [g.monic(key) for g in gens if not g.is_zero()]
    if not G:
        return []
    pairs = [(i, j) for j in range(len(G)) for i in range(j)]
    while pairs:
        pairs.sort(key=lambda p: key(monomial_lcm(G[p[0]].leading(key)[0], G[p[1]].leading(key)[0])))
        i, j = pairs.pop(0)
        mi = G[i].leading(key)[0]
        mj = G[j].leading(key)[0]
        if monomial_lcm(mi, mj) == monomial_mul(mi, mj):
            continue  # coprime leads: S-polynomial reduces to zero
        r = groebner_normal_form(spoly(G[i], G[j], key), G, key)
        if not r.is_zero():
            G.append(r.monic(key))
            pairs.extend((i, len(G) - 1) for i in range(len(G) - 1))
    return _interreduce(_minimalize(G, key), key)


def _minimalize(G: list, key: OrderKey) -> list:
    Gmin: list = []
    for f in sorted(G, key=lambda g: key(g.leading(key)[0])):
        lm = f.leading(key)[0]
        if not any(monomial_divides(g.leading(key)[0], lm) for g in Gmin):
            Gmin.append(f)
    return Gmin


def _interreduce(G: list, key: OrderKey) -> list:
    out = []
    for i, g in enumerate(G):
        r = groebner_normal_form(g, G[:i] + G[i + 1:], key)
        if not r.is_zero():
            out.append(r.monic(key))
    out.sort(key=lambda g: key(g.leading(key)[0]))
    return out


class Ideal:
    """An ideal of Q[ctx], carrying cached reduced Groebner bases per order."""

    def __init__(self, ctx: tuple, gens: list):
        self.ctx = tuple(ctx)
        self.gens = [g if isinstance(g, Polynomial) else Polynomial.parse(ctx, g) for g in gens]
        for g in self.gens:
            if g.ctx != self.ctx:
                raise ValueError("generator context mismatch")
        self._gb_cache: dict = {}
        self._lock = threading.Lock()

    @classmethod
    def parse(cls, ctx, texts: list) -> "Ideal":
        return cls(ctx, [Polynomial.parse(ctx, t) for t in texts])

    def groebner(self, key: OrderKey = grevlex_key, tag: str = "grevlex") -> list:
        """Reduced Groebner basis, cached per order tag."""
        with self._lock:
            if tag not in self._gb_cache:
                self._gb_cache[tag] = buchberger(self.gens, key)
            return self._gb_cache[tag]

    def normal_form(self, f: Polynomial) -> Polynomial:
        return groebner_normal_form(f, self.groebner(), grevlex_key)

    def contains(self, f: Polynomial) -> bool:
        if self._all_monomial_gens():
            return self._monomial_contains(f)
        return self.normal_form(f).is_zero()

    def is_trivial(self) -> bool:
        """True when the ideal is the whole ring."""
        gb = self.groebner()
        return len(gb) == 1 and gb[0].is_constant() and not gb[0].is_zero()

    def is_zero(self) -> bool:
        return not self.groebner()

    def _all_monomial_gens(self) -> bool:
        return all(g.is_monomial() for g in self.gens)

    def _monomial_contains(self, f: Polynomial) -> bool:
        monos = [g.leading()[0] for g in self.gens]
        return all(any(monomial_divides(lm, m) for lm in monos) for m in f.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ctx == other.ctx and self.groebner() == other.groebner()

    def __hash__(self):
        return hash((self.ctx, tuple(self.groebner())))

    def signature(self) -> tuple:
        """Canonical hashable fingerprint (the reduced grevlex basis)."""
        return tuple(self.groebner())

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.gens)})"


def _fresh_var(ctx: tuple, base: str = "t_") -> str:
    name = base
    while name in ctx:
        name += "_"
    return name


def ideal_combine(I: Ideal, J: Ideal, op: str) -> Ideal:
    """Sum, product, intersection, or colon of two ideals of the same ring.

    Intersection goes through one auxiliary variable and elimination;
    colon divides the generators of ``I ∩ (g)`` by ``g`` for each generator
    ``g`` of ``J`` and intersects the results.
    """
    if I.ctx != J.ctx:
        raise ValueError("ideal contexts differ")
    if op == "sum":
        return Ideal(I.ctx, I.gens + J.gens)
    if op == "product":
        gens = [f * g for f in I.gens for g in J.gens]
        return Ideal(I.ctx, gens or [Polynomial.zero(I.ctx)])
    if op == "intersection":
        return _intersect(I, J)
    if op == "colon":
        return _colon(I, J)
    raise ValueError(f"unknown ideal operation {op!r}")


def _intersect(I: Ideal, J: Ideal) -> Ideal:
    ctx = I.ctx
    t = _fresh_var(ctx)
    big = (t,) + ctx
    tv = Polynomial.variable(big, t)
    gens = [tv * g.extend_ctx(big) for g in I.gens]
    gens += [(Polynomial.one(big) - tv) * g.extend_ctx(big) for g in J.gens]
    gb = buchberger(gens, elim_key(1))
    kept = [g.restrict_ctx(ctx) for g in gb if not g.involves(t)]
    return Ideal(ctx, kept or [Polynomial.zero(ctx)])


def _colon(I: Ideal, J: Ideal) -> Ideal:
    result = None
    for g in J.gens:
        if g.is_zero():
            continue
        meet = _intersect(I, Ideal(I.ctx, [g]))
        part = Ideal(I.ctx, [exact_div(h, g) for h in meet.groebner()] or [Polynomial.zero(I.ctx)])
        result = part if result is None else _intersect(result, part)
    if result is None:
        raise ValueError("colon by the zero ideal")
    return result


def ideal_power(I: Ideal, n: int) -> Ideal:
    """The n-th power ideal, generated by n-fold products of generators."""
    if n == 0:
        return Ideal(I.ctx, [Polynomial.one(I.ctx)])
    result = I
    for _ in range(n - 1):
        result = ideal_combine(result, I, "product")
    return result


def radical_membership(I: Ideal, f: Polynomial) -> bool:
    """True when some power of ``f`` lies in ``I`` (auxiliary-variable trick)."""
    if f.is_zero():
        return True
    ctx = I.ctx
    t = _fresh_var(ctx, "t_rad_")
    big = (t,) + ctx
    tv = Polynomial.variable(big, t)
    gens = [g.extend_ctx(big) for g in I.gens]
    gens.append(Polynomial.one(big) - tv * f.extend_ctx(big))
    gb = buchberger(gens, grevlex_key)
    return len(gb) == 1 and gb[0].is_constant()


def radical_leq(I: Ideal, J: Ideal) -> bool:
    """True when sqrt(I) is contained in sqrt(J), i.e. every generator of I is in sqrt(J)."""
    return all(radical_membership(J, g) for g in I.gens)


def radical_equal(I: Ideal, J: Ideal) -> bool:
    """True when the two ideals have the same radical."""
    return radical_leq(I, J) and radical_leq(J, I)
