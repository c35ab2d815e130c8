"""Finitely presented commutative rings Q[ctx]/relations with canonical forms.

Every element is kept in Groebner normal form with respect to the relation
ideal, so equality is literal equality of term maps and the monomial basis
of any bounded-degree slice is computable.
"""

from __future__ import annotations

from gliderlab.ideals import Ideal, groebner_normal_form
from gliderlab.poly import Polynomial, grevlex_key, monomial_divides, monomials_up_to


class QuotientRingPresentation:
    """A commutative ring presented as polynomials modulo a relation ideal."""

    def __init__(self, ctx: tuple, relations: Ideal | None = None):
        self.ctx = tuple(ctx)
        if relations is None:
            relations = Ideal(self.ctx, [])
        if relations.ctx != self.ctx:
            raise ValueError("relation ideal context mismatch")
        self.relations = relations
        self._basis_cache: dict = {}

    @classmethod
    def free(cls, ctx) -> "QuotientRingPresentation":
        return cls(ctx, None)

    def nf(self, f: Polynomial) -> Polynomial:
        """Canonical representative of the class of ``f``."""
        if not self.relations.gens:
            return f
        return self.relations.normal_form(f)

    def parse(self, text: str) -> Polynomial:
        return self.nf(Polynomial.parse(self.ctx, text))

    def var(self, name: str) -> Polynomial:
        return self.nf(Polynomial.variable(self.ctx, name))

    def one(self) -> Polynomial:
        return Polynomial.one(self.ctx)

    def zero(self) -> Polynomial:
        return Polynomial.zero(self.ctx)

    def mul(self, f: Polynomial, g: Polynomial) -> Polynomial:
        return self.nf(f * g)

    def add(self, f: Polynomial, g: Polynomial) -> Polynomial:
        return self.nf(f + g)

    def power(self, f: Polynomial, n: int) -> Polynomial:
        out = self.one()
        for _ in range(n):
            out = self.mul(out, f)
        return out

    def is_zero(self, f: Polynomial) -> bool:
        return self.nf(f).is_zero()

    def equal(self, f: Polynomial, g: Polynomial) -> bool:
        return self.nf(f - g).is_zero()

    def monomial_basis(self, degree: int) -> list:
        """Standard monomials of total degree <= degree (not divisible by any
        leading monomial of the relation basis); a linear basis of the slice."""
        if degree in self._basis_cache:
            return self._basis_cache[degree]
        leads = [g.leading(grevlex_key)[0] for g in self.relations.groebner()]
        basis = [
            m
            for m in monomials_up_to(len(self.ctx), degree)
            if not any(monomial_divides(lm, m) for lm in leads)
        ]
        self._basis_cache[degree] = basis
        return basis

    def __repr__(self):
        rel = ", ".join(str(g) for g in self.relations.gens) or "0"
        return f"QuotientRingPresentation(Q[{', '.join(self.ctx)}] / ({rel}))"
