"""Exact Gaussian elimination over the rationals on sparse vectors.

Vectors are dicts mapping hashable, order-comparable keys (monomials, PBW
exponent pairs, graded slots, ...) to nonzero Fractions.  ``Echelon``
maintains a fully reduced row-echelon family, optionally tracking how each
row was combined from the input vectors, which yields membership tests,
coordinate expressions, nullspaces, and span intersections.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Optional

Vec = dict


def vec_axpy(target: Vec, source: Vec, c: Fraction) -> None:
    """In place target += c * source, dropping zero entries."""
    if c == 0:
        return
    for k, v in source.items():
        s = target.get(k, Fraction(0)) + c * v
        if s == 0:
            target.pop(k, None)
        else:
            target[k] = s


def vec_scale(v: Vec, c: Fraction) -> Vec:
    return {k: c * x for k, x in v.items()} if c != 0 else {}


class Echelon:
    """A reduced row-echelon span of sparse vectors.

    ``keyfn`` orders the coordinate keys; the pivot of a row is its largest
    key.  Rows are kept mutually reduced so residuals are canonical.
    """

    def __init__(self, keyfn: Optional[Callable] = None, track: bool = False):
        self.keyfn = keyfn if keyfn is not None else lambda k: k
        self.track = track
        self.rows: list = []      # list[Vec]
        self.combos: list = []    # parallel list[Vec over input indices]
        self.pivots: dict = {}    # pivot key -> row index
        self.added = 0            # number of input vectors seen

    def _reduce(self, vec: Vec, combo: Vec):
        vec = dict(vec)
        combo = dict(combo)
        # rows are fully reduced, so eliminating a pivot never reintroduces one
        while True:
            hits = [k for k in vec if k in self.pivots]
            if not hits:
                break
            k = max(hits, key=self.keyfn)
            i = self.pivots[k]
            c = -vec[k] / self.rows[i][k]
            vec_axpy(vec, self.rows[i], c)
            if self.track:
                vec_axpy(combo, self.combos[i], c)
        return vec, combo

    def residual(self, vec: Vec) -> Vec:
        """Canonical representative of ``vec`` modulo the span."""
        r, _ = self._reduce(vec, {})
        return r

    def contains(self, vec: Vec) -> bool:
        return not self.residual(vec)

    def express(self, vec: Vec) -> Optional[Vec]:
        """Coordinates of ``vec`` over the added input vectors, or None.

        Requires the echelon to have been built with ``track=True``.
        """
        if not self.track:
            raise ValueError("echelon was not built with tracking")
        r, combo = self._reduce(vec, {})
        if r:
            return None
        return vec_scale(combo, Fraction(-1))

    def add(self, vec: Vec) -> bool:
        """Insert a vector; returns True when it enlarged the span.

        When tracking, the relation of a dependent vector to earlier inputs
        is recorded in ``self.relations`` (a list of combo vectors r with
        ``sum_i r[i] * input_i = 0``).
        """
        idx = self.added
        self.added += 1
        combo = {idx: Fraction(1)} if self.track else {}
        r, rc = self._reduce(vec, combo)
        if not r:
            if self.track and rc:
                self.relations.append(rc)
            return False
        pivot = max(r, key=self.keyfn)
        c = Fraction(1) / r[pivot]
        r = vec_scale(r, c)
        rc = vec_scale(rc, c)
        # back-substitute into existing rows so the family stays fully reduced
        for i, row in enumerate(self.rows):
            if pivot in row:
                cc = -row[pivot]
                vec_axpy(row, r, cc)
                if self.track:
                    vec_axpy(self.combos[i], rc, cc)
        self.pivots[pivot] = len(self.rows)
        self.rows.append(r)
        self.combos.append(rc)
        return True

    # populated lazily so plain spans pay nothing
    @property
    def relations(self) -> list:
        if not hasattr(self, "_relations"):
            self._relations = []
        return self._relations

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis(self) -> list:
        """Echelon basis rows, ordered by descending pivot."""
        order = sorted(range(len(self.rows)), key=lambda i: self.keyfn(max(self.rows[i], key=self.keyfn)), reverse=True)
        return [self.rows[i] for i in order]


def span(vectors: list, keyfn: Optional[Callable] = None) -> Echelon:
    """Echelon span of the given vectors."""
    e = Echelon(keyfn=keyfn)
    for v in vectors:
        e.add(v)
    return e


def nullspace(vectors: list, keyfn: Optional[Callable] = None) -> list:
    """Basis of linear relations sum_i c_i * vectors[i] = 0 as combo dicts."""
    e = Echelon(keyfn=keyfn, track=True)
    for v in vectors:
        e.add(v)
    return list(e.relations)


def span_equal(a: Echelon, b: Echelon) -> bool:
    """True when the two echelon spans coincide."""
    return all(b.contains(r) for r in a.rows) and all(a.contains(r) for r in b.rows)


def span_intersection(avecs: list, bvecs: list, keyfn: Optional[Callable] = None) -> list:
    """Basis vectors of span(avecs) ∩ span(bvecs)."""
    rels = nullspace(list(avecs) + list(bvecs), keyfn=keyfn)
    out = Echelon(keyfn=keyfn)
    for rel in rels:
        v: Vec = {}
        for i, c in rel.items():
            if i < len(avecs):
                vec_axpy(v, avecs[i], c)
        if v:
            out.add(v)
    return out.rows
