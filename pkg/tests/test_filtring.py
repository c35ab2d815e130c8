"""Tests for generated filtrations, degrees, and graded presentations."""

import pytest

from conftest import cusp_ring, hyperbola_ring, line_ring, plane_ring, tower_ring, xyt_ring
from gliderlab.filtered import (
    FilteredRing,
    ReesElement,
    graded_presentation_bounded,
    rees_fibers_check,
    sigma_map,
)
from gliderlab.weyl import WeylElement, rees_fibers_check_weyl


# ------------------------------------------------------------- degrees


def test_standard_filtration_degree_is_total_degree():
    fr = plane_ring()
    r = fr.ring
    assert fr.f_degree(r.parse("X^2*Y")) == 3
    assert fr.f_degree(r.parse("X + Y^4")) == 4
    assert fr.f_degree(r.one()) == 0


def test_cusp_degrees():
    fr = cusp_ring()
    r = fr.ring
    # X^2, X^3 and everything they generate sit in degree 0; X needs degree 1
    assert fr.f_degree(r.parse("X^2")) == 0
    assert fr.f_degree(r.parse("X^5")) == 0
    assert fr.f_degree(r.parse("X")) == 1
    assert fr.f_degree(r.parse("X + X^2")) == 1


def test_xyt_degree_collapse():
    fr = xyt_ring()
    r = fr.ring
    # the product of the two degree-1 generators lies in the subring: X*Y = T
    assert fr.f_degree(r.parse("X")) == 1
    assert fr.f_degree(r.parse("Y")) == 1
    assert fr.f_degree(r.parse("X*Y")) == 0
    assert fr.f_degree(r.parse("X^2*Y")) == 1


def test_degree_submultiplicative_samples():
    fr = xyt_ring()
    r = fr.ring
    samples = [r.parse(s) for s in ["X", "Y", "T", "X^2", "Y^2", "X*Y", "T*Y"]]
    for f in samples:
        for g in samples:
            prod = r.nf(f * g)
            if prod.is_zero():
                continue
            dp = fr.f_degree(prod)
            assert dp is not None
            assert dp <= fr.f_degree(f) + fr.f_degree(g)


def test_filtration_is_exhaustive_on_slice():
    fr = cusp_ring()
    r = fr.ring
    for k in range(0, 9):
        assert fr.f_degree(r.parse(f"X^{k}") if k else r.one()) is not None


def test_levels_nested():
    fr = cusp_ring()
    for n in range(0, 5):
        lower = fr.f_span(n)
        upper = fr.f_span(n + 1)
        assert all(upper.contains(row) for row in lower.rows)


def test_tower_levels():
    fr = tower_ring()
    r = fr.ring
    assert fr.f_degree(r.parse("T^3")) == 0
    assert fr.f_degree(r.parse("Y")) == 1
    assert fr.f_degree(r.parse("T*Y^2")) == 1
    assert not fr.in_level(r.parse("Y"), 0)
    assert fr.in_level(r.parse("Y"), 5)
    assert not fr.in_level(r.one(), -1)  # F_{-1} = 0


# ------------------------------------------------- graded presentations


def test_cusp_graded_presentation():
    fr = cusp_ring()
    gp = graded_presentation_bounded(fr, 6)
    # frozen expectation: one degree-1 symbol e0 with e0^2 = 0, the subring
    # torsion relations s0*e0 = s1*e0 = 0, and the cusp equation s0^3 = s1^2
    assert gp.relation_strings() == ["e0^2", "s1*e0", "s0*e0", "s0^3 - s1^2"]
    assert gp.positive_degree_symbols() == ["e0"]


def test_xyt_graded_presentation():
    fr = xyt_ring()
    gp = graded_presentation_bounded(fr, 4)
    # the two degree-1 symbols multiply to zero because X*Y drops into F_0
    assert gp.relation_strings() == ["e0*e1"]


def test_hyperbola_graded_presentation():
    fr = hyperbola_ring()
    gp = graded_presentation_bounded(fr, 4)
    assert gp.relation_strings() == ["e0*e1"]


def test_plane_graded_presentation_is_free():
    fr = plane_ring()
    gp = graded_presentation_bounded(fr, 4)
    assert gp.relations.is_zero()


def test_sigma_map_and_products():
    fr = cusp_ring()
    r = fr.ring
    gp = graded_presentation_bounded(fr, 6)
    sx = sigma_map(gp, r.parse("X"))
    assert str(sx.poly) == "e0" and sx.degree == 1
    # sigma(X)^2 = 0: the square drops into F_0
    assert gp.sigma_product(sx, sx).is_zero()
    s2 = sigma_map(gp, r.parse("X^2"))
    assert str(s2.poly) == "s0" and s2.degree == 0
    # multiplicativity where no degree drop occurs
    s23 = sigma_map(gp, r.parse("X^5"))
    s3 = sigma_map(gp, r.parse("X^3"))
    assert gp.sigma_product(s2, s3).poly == s23.poly


def test_sigma_of_zero():
    fr = cusp_ring()
    s = sigma_map(graded_presentation_bounded(fr, 4), fr.ring.zero())
    assert s.is_zero()


# ------------------------------------------------------------ blowup fibers


def test_rees_element_levels():
    fr = cusp_ring()
    r = fr.ring
    e = ReesElement(fr, r.parse("X"), 1)
    assert (e * e).level == 2
    with pytest.raises(ValueError):
        ReesElement(fr, r.parse("X"), 0)  # X is not in F_0


def test_rees_fibers_cusp():
    fr = cusp_ring()
    gp = graded_presentation_bounded(fr, 6)
    outcomes = rees_fibers_check(fr, gp)
    assert outcomes, "no sample pairs produced"
    bad = [o for o in outcomes if not o.ok]
    assert not bad, bad


def test_rees_fibers_xyt():
    fr = xyt_ring()
    gp = graded_presentation_bounded(fr, 4)
    outcomes = rees_fibers_check(fr, gp)
    assert outcomes and all(o.ok for o in outcomes)


def test_rees_fibers_weyl_order_filtration():
    x, d = WeylElement.x(), WeylElement.d()
    samples = [x, d, x * d, d * d, x + d, x * d + WeylElement.one()]
    results = rees_fibers_check_weyl(samples, "order")
    assert results and all(ok for _, ok in results)
    results_t = rees_fibers_check_weyl(samples, "total")
    assert results_t and all(ok for _, ok in results_t)
