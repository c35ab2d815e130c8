"""Descending chains inside a filtered ring and their fragment structure.

A glider is a descending chain M_0 ⊇ M_1 ⊇ ... of F_0-submodules together
with the compatibility axiom  F_i · M_μ ⊆ M_{μ-i}  for i <= μ.  The chain
is given by finite generator lists per level over the subring F_0; beyond
the listed depth a tail policy ("repeat" the last level or "zero") applies.
All containments are checked inside the bounded-degree slice.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from gliderlab.filtered import FilteredModule, FilteredRing, _poly_vec
from gliderlab.linalg import Echelon, span_intersection
from gliderlab.poly import Polynomial, grevlex_key


class Chain:
    """Level-wise generator lists of a descending chain, with a tail policy."""

    def __init__(self, levels: list, tail: str = "repeat"):
        if not levels:
            raise ValueError("a chain needs at least level 0")
        if tail not in ("repeat", "zero"):
            raise ValueError(f"unknown tail policy {tail!r}")
        self.levels = [list(gens) for gens in levels]
        self.tail = tail

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def level_gens(self, d: int) -> list:
        if d < 0:
            raise ValueError("chain levels are indexed from 0")
        if d <= self.depth:
            return self.levels[d]
        return self.levels[-1] if self.tail == "repeat" else []


@dataclass
class FragmentReport:
    """Outcome of the fragment-axiom scan for a chain at a bound."""

    descending: bool
    axioms_ok: bool
    standard: bool
    bound: int
    failures: list = field(default_factory=list)


class Glider:
    """A chain verified to descend, viewed inside its filtered ring."""

    def __init__(self, fr: FilteredRing, chain: Chain):
        self.fr = fr
        self.chain = chain
        self.module = FilteredModule(fr, chain=chain)

    @property
    def depth(self) -> int:
        return self.chain.depth

    def span(self, d: int, B: Optional[int] = None) -> Echelon:
        return self.module.chain_span(d, B)


def build_glider(fr: FilteredRing, chain: Chain, B: Optional[int] = None) -> Glider:
    """Construct a glider after verifying the chain actually descends."""
    B = fr.bound if B is None else B
    g = Glider(fr, chain)
    for d in range(chain.depth):
        lower = g.span(d, B)
        for gen in chain.level_gens(d + 1):
            nf = fr.ring.nf(gen)
            if not nf.is_zero() and nf.total_degree() <= B and not lower.contains(_poly_vec(nf)):
                raise ValueError(f"chain does not descend at level {d + 1}: {gen}")
    return g


def _filt_products(fr: FilteredRing, length: int) -> list:
    """All products of exactly ``length`` filtration generators (with repeats)."""
    out = [Polynomial.one(fr.ring.ctx)]
    for _ in range(length):
        out = [fr.ring.nf(p * g) for p in out for g in fr.filt_gens]
    seen = []
    result = []
    for p in out:
        if not p.is_zero() and p not in seen:
            seen.append(p)
            result.append(p)
    return result


def check_fragment_axioms(glider: Glider, B: Optional[int] = None) -> FragmentReport:
    """Verify descent, the axiom F_i·M_μ ⊆ M_{μ-i}, and standardness.

    Products with normal form beyond the degree bound are skipped (they are
    outside the verified slice).  Standardness asks  F_1·M_n = M_{n-1}  as
    bounded spans, compared inside the slice where both sides are complete.
    """
    fr = glider.fr
    B = fr.bound if B is None else B
    failures = []
    descending = True
    for d in range(glider.depth):
        upper = glider.span(d, B)
        for r in glider.span(d + 1, B).rows:
            if not upper.contains(r):
                descending = False
                failures.append(f"descent fails at level {d + 1}")
                break
    axioms_ok = True
    for mu in range(glider.depth + 1):
        for i in range(1, mu + 1):
            target = glider.span(mu - i, B)
            for w in _filt_products(fr, i):
                for m in glider.chain.level_gens(mu):
                    prod = fr.ring.nf(w * m)
                    if prod.is_zero() or prod.total_degree() > B:
                        continue
                    if not target.contains(_poly_vec(prod)):
                        axioms_ok = False
                        failures.append(f"F_{i}·M_{mu} ⊄ M_{mu - i}: ({w})·({m})")
    standard = _standard_check(glider, B)
    return FragmentReport(descending, axioms_ok, standard, B, failures)


def _standard_check(glider: Glider, B: int) -> bool:
    fr = glider.fr
    gd = max((g.total_degree() for g in fr.filt_gens), default=0)
    window = B - gd
    for n in range(1, glider.depth + 1):
        produced = Echelon(keyfn=grevlex_key)
        for s in fr.s_closure(B):
            for w in [Polynomial.one(fr.ring.ctx)] + list(fr.filt_gens):
                for m in glider.chain.level_gens(n):
                    prod = fr.ring.nf(s * w * m)
                    if not prod.is_zero() and prod.total_degree() <= window:
                        produced.add(_poly_vec(prod))
        target_rows = [r for r in glider.span(n - 1, B).rows
                       if max(sum(k) for k in r) <= window]
        if not all(produced.contains(r) for r in target_rows):
            return False
        if not all(glider.span(n - 1, B).contains(r) for r in produced.rows):
            return False
    return True


def star_chain(glider: Glider, B: Optional[int] = None) -> list:
    """The chain M_i* = {m in M : F_i·m ⊆ M}, computed as bounded spans.

    Candidates are restricted to the part of the slice whose products with
    all length-<=i generator words stay inside the bound, so membership of
    every constraint is decidable.  Returns one echelon per i = 0..depth.
    """
    fr = glider.fr
    B = fr.bound if B is None else B
    gd = max((g.total_degree() for g in fr.filt_gens), default=1)
    m0 = glider.span(0, B)
    out = []
    for i in range(glider.depth + 1):
        cap = B - i * gd
        candidates = [r for r in m0.rows if max(sum(k) for k in r) <= cap]
        words = []
        for l in range(1, i + 1):
            words.extend(_filt_products(fr, l))
        star = Echelon(keyfn=grevlex_key)
        if not words:
            for r in candidates:
                star.add(dict(r))
            out.append(star)
            continue
        # linear conditions: residual of w·r modulo M_0 must vanish
        ech = Echelon(keyfn=lambda k: k, track=True)
        kept = []
        for idx, r in enumerate(candidates):
            constraint: dict = {}
            rp = Polynomial(fr.ring.ctx, r)
            for wi, w in enumerate(words):
                res = m0.residual(_poly_vec(fr.ring.nf(w * rp)))
                for k, c in res.items():
                    constraint[(wi, k)] = c
            kept.append(r)
            if not ech.add(constraint):
                rel = ech.relations[-1]
                vec: dict = {}
                for j, c in rel.items():
                    for k, v in kept[j].items():
                        vec[k] = vec.get(k, 0) + c * v
                vec = {k: v for k, v in vec.items() if v != 0}
                if vec:
                    star.add(vec)
        out.append(star)
    return out


@dataclass
class BodyReport:
    """Bounded intersection of the chain levels."""

    rows: list
    stabilized: bool
    depth: int

    def is_zero(self) -> bool:
        return self.stabilized and not self.rows


def body(glider: Glider, B: Optional[int] = None) -> BodyReport:
    """Intersection of all listed levels; ``stabilized`` reports whether the
    last step still shrank (if it did, the full intersection may be smaller)."""
    fr = glider.fr
    B = fr.bound if B is None else B
    cum = [dict(r) for r in glider.span(0, B).rows]
    dims = [len(cum)]
    for d in range(1, glider.depth + 1):
        cum = span_intersection(cum, glider.span(d, B).rows, keyfn=grevlex_key)
        dims.append(len(cum))
    stabilized = len(dims) >= 2 and dims[-1] == dims[-2]
    return BodyReport(cum, stabilized, glider.depth)


class GradedGlider:
    """The graded fragment  ⊕_i M_i/M_{i+1}  with symbol actions.

    Level i holds canonical residual vectors of M_i modulo M_{i+1}; a ring
    element of filtration degree j maps level i to level i-j.
    """

    def __init__(self, glider: Glider, B: Optional[int] = None):
        self.glider = glider
        self.fr = glider.fr
        self.B = glider.fr.bound if B is None else B
        self.depth = glider.depth

    def level_basis(self, i: int) -> list:
        """Residual vectors spanning M_i/M_{i+1} inside the slice."""
        below = self.glider.span(i + 1, self.B)
        ech = Echelon(keyfn=grevlex_key)
        out = []
        for r in self.glider.span(i, self.B).rows:
            res = below.residual(r)
            if res and ech.add(res):
                out.append(res)
        return out

    def act(self, s: Polynomial, j: int, i: int, vec: dict) -> Optional[dict]:
        """Class of s·(class at level i) in module degree j-i; None when
        outside the verified slice.  For j > i the product lands in the
        positive part of the module grading."""
        prod = self.fr.ring.nf(s * Polynomial(self.fr.ring.ctx, vec))
        if prod.total_degree() > self.B:
            return None
        if i - j >= 0:
            return self.glider.span(i - j + 1, self.B).residual(_poly_vec(prod))
        # target degree n = j - i > 0: class in F_n/F_{n-1} of the module
        return self.glider.module.pos_span(j - i - 1, self.B).residual(_poly_vec(prod))

    def torsion_witness(self, s: Polynomial, j: int) -> Optional[tuple]:
        """A nonzero class killed by the degree-j symbol of s, if one exists
        in the verified slice: returns (level, representative polynomial)."""
        for i in range(0, self.depth):
            for vec in self.level_basis(i):
                res = self.act(s, j, i, vec)
                if res is not None and not res:
                    return (i, Polynomial(self.fr.ring.ctx, vec))
        return None

    def kills_all(self, s: Polynomial, j: int) -> Optional[bool]:
        """Whether s's symbol annihilates every verifiable class; None if no
        class could be verified."""
        verdicts = []
        for i in range(0, self.depth):
            for vec in self.level_basis(i):
                res = self.act(s, j, i, vec)
                if res is not None:
                    verdicts.append(not res)
        if not verdicts:
            return None
        return all(verdicts)


def graded_glider(glider: Glider, B: Optional[int] = None) -> GradedGlider:
    """Graded fragment of a glider with level bases and symbol actions."""
    return GradedGlider(glider, B)
