"""Shared model builders for the test suite."""

import pytest

from gliderlab.filtered import FilteredRing
from gliderlab.gliders import Chain, build_glider
from gliderlab.ideals import Ideal
from gliderlab.quotient import QuotientRingPresentation as QRP


def cusp_ring() -> FilteredRing:
    """Q[X] filtered over the subring Q[X^2, X^3] with ring generator X."""
    ring = QRP.free(("X",))
    return FilteredRing(ring, [ring.parse("X^2"), ring.parse("X^3")], [ring.parse("X")])


def cusp_chain(fr: FilteredRing, depth: int = 10) -> Chain:
    """M_0 = Q[X^2,X^3] ⊃ Q·X^2 + (X^4) ⊃ (X^5) ⊃ (X^6) ⊃ ... inside Q[X]."""
    ring = fr.ring
    levels = [[ring.one()]]
    levels.append([ring.parse("X^2"), ring.parse("X^4"), ring.parse("X^5")])
    for n in range(2, depth + 1):
        levels.append([ring.parse(f"X^{n + 3}"), ring.parse(f"X^{n + 4}")])
    return Chain(levels, tail="zero")


def xyt_ring() -> FilteredRing:
    """Q[X,Y,T]/(XY-T) filtered over Q[T] with ring generators X, Y."""
    ctx = ("X", "Y", "T")
    ring = QRP(ctx, Ideal.parse(ctx, ["X*Y - T"]))
    return FilteredRing(ring, [ring.parse("T")], [ring.parse("X"), ring.parse("Y")])


def xyt_chain(fr: FilteredRing, depth: int = 8) -> Chain:
    """M_0 = Q[T,Y] ⊃ (Y) ⊃ (Y)^2 ⊃ ... as Q[T]-modules inside Q[X,Y,T]/(XY-T)."""
    ring = fr.ring
    B = fr.bound
    levels = []
    for n in range(depth + 1):
        gens = []
        for j in range(B + 1):
            if n + j == 0:
                gens.append(ring.one())
            elif n + j <= B:
                gens.append(ring.parse(f"Y^{n + j}"))
        levels.append(gens)
    return Chain(levels, tail="zero")


def laurent_ring() -> FilteredRing:
    """Q[U, U^-1] presented as Q[U,V]/(UV-1), strongly filtered: F_0 = Q[V]."""
    ctx = ("U", "V")
    ring = QRP(ctx, Ideal.parse(ctx, ["U*V - 1"]))
    return FilteredRing(ring, [ring.parse("V")], [ring.parse("U")])


def laurent_chain(fr: FilteredRing, depth: int = 6) -> Chain:
    """The degree-zero-part chain M_n = V^n Q[V]."""
    ring = fr.ring
    return Chain([[ring.parse(f"V^{n}") if n else ring.one()] for n in range(depth + 1)],
                 tail="repeat")


def hyperbola_ring() -> FilteredRing:
    """Q[X,Y]/(XY-1) with the standard filtration over Q, generators X, Y."""
    ctx = ("X", "Y")
    ring = QRP(ctx, Ideal.parse(ctx, ["X*Y - 1"]))
    return FilteredRing(ring, [], [ring.parse("X"), ring.parse("Y")])


def plane_ring() -> FilteredRing:
    """Q[X,Y] with the standard (total-degree) filtration over Q."""
    ring = QRP.free(("X", "Y"))
    return FilteredRing(ring, [], [ring.parse("X"), ring.parse("Y")])


def line_ring() -> FilteredRing:
    """Q[X] with the standard (degree) filtration over Q."""
    ring = QRP.free(("X",))
    return FilteredRing(ring, [], [ring.parse("X")])


def tower_ring() -> FilteredRing:
    """The two-step tower Q[T] ⊂ Q[T,Y]: F_0 = Q[T], F_n = Q[T,Y] for n >= 1."""
    ring = QRP.free(("T", "Y"))
    return FilteredRing(ring, [ring.parse("T")], [],
                        mode="tower",
                        tower_levels=[[ring.parse("T")],
                                      [ring.parse("T"), ring.parse("Y")]])


@pytest.fixture(scope="session")
def cusp():
    fr = cusp_ring()
    return fr, build_glider(fr, cusp_chain(fr))


@pytest.fixture(scope="session")
def xyt():
    fr = xyt_ring()
    return fr, build_glider(fr, xyt_chain(fr))


@pytest.fixture(scope="session")
def laurent():
    fr = laurent_ring()
    return fr, build_glider(fr, laurent_chain(fr))
