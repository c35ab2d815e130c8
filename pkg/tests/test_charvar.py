"""Tests for characteristic varieties, exclusions, and the smoothness detector."""

import pytest

from conftest import cusp_chain, cusp_ring, xyt_chain, xyt_ring
from gliderlab.charvariety import (
    CharVarietyReport,
    GliderGradedModule,
    WeylCyclicModule,
    char_variety,
    graded_annihilator_bounded,
    smoothness_glider,
    strong_char_excludes,
)
from gliderlab.filtered import graded_presentation_bounded
from gliderlab.gliders import build_glider, graded_glider
from gliderlab.ideals import Ideal
from gliderlab.quotient import QuotientRingPresentation as QRP
from gliderlab.weyl import SYMBOL_CTX, WeylElement, WeylLeftIdeal


def holonomic_module() -> WeylCyclicModule:
    """A_1 / A_1·(x d) with the operator-order filtration."""
    return WeylCyclicModule(WeylLeftIdeal([WeylElement.x() * WeylElement.d()]), "order")


# ---------------------------------------------------------- annihilators


def test_weyl_annihilator_is_symbol_ideal():
    ann = graded_annihilator_bounded(holonomic_module(), 6)
    assert [str(g) for g in ann.gens] == ["x*xi"]


def test_faithful_module_annihilator_zero():
    gm = WeylCyclicModule(WeylLeftIdeal([]))
    assert graded_annihilator_bounded(gm).is_zero()


def test_xyt_glider_annihilator_contains_sigma_y(xyt):
    fr, g = xyt
    gp = graded_presentation_bounded(fr, 4)
    ann = graded_annihilator_bounded(GliderGradedModule(graded_glider(g), gp))
    # the class ring is Q[s0, e0, e1]/(e0 e1) with e1 the symbol of Y;
    # Y·(Y^n-chain class) always drops a level, X does not
    assert ann.contains(gp.ring.parse("e1"))
    assert not ann.contains(gp.ring.parse("e0"))


# ------------------------------------------------------------ char variety


def test_weyl_char_variety_membership():
    x_prime = Ideal.parse(SYMBOL_CTX, ["x"])
    shifted = Ideal.parse(SYMBOL_CTX, ["x - 1"])
    xi_prime = Ideal.parse(SYMBOL_CTX, ["xi"])
    rep = char_variety(holonomic_module(), [x_prime, shifted, xi_prime])
    assert rep.verdicts == [("(x)", "in-chi"), ("(x - 1)", "not-in-chi"), ("(xi)", "in-chi")]


def test_zero_module_char_variety_empty():
    gm = WeylCyclicModule(WeylLeftIdeal([WeylElement.one()]))
    rep = char_variety(gm, [Ideal.parse(SYMBOL_CTX, ["x"])])
    # unit annihilator: no prime contains 1
    assert rep.verdicts == [("(x)", "not-in-chi")]


# --------------------------------------------------------- strong variety


def test_weyl_exclusion_witness():
    v = strong_char_excludes(holonomic_module(), Ideal.parse(SYMBOL_CTX, ["x"]), 2)
    # xi lies outside (x) and kills the class of x in Q[x,xi]/(x xi)
    assert v.status == "excluded"
    assert v.witness == ("xi", "x")


def test_weyl_no_exclusion_for_faithful():
    gm = WeylCyclicModule(WeylLeftIdeal([]))
    v = strong_char_excludes(gm, Ideal.parse(SYMBOL_CTX, ["x"]), 2)
    assert v.status == "in-xi-up-to"


def test_xi_subset_chi_consistency():
    # an exclusion from xi never contradicts membership in chi on this example:
    # (x) is excluded from xi yet lies in chi — the strict inclusion
    gm = holonomic_module()
    rep = char_variety(gm, [Ideal.parse(SYMBOL_CTX, ["x"])])
    v = strong_char_excludes(gm, Ideal.parse(SYMBOL_CTX, ["x"]), 2)
    assert rep.verdicts[0][1] == "in-chi" and v.status == "excluded"


def test_cusp_glider_excluded_by_epsilon(cusp):
    fr, g = cusp
    gp = graded_presentation_bounded(fr, 6)
    gm = GliderGradedModule(graded_glider(g), gp)
    v = strong_char_excludes(gm, fr.ring.parse("X"), 2)
    assert v.status == "excluded"
    assert v.witness[0] == "e0"


def test_exclusion_gen_closed_upward(xyt):
    # if a functor's datum excludes, any finer datum (larger filter) excludes
    # with the same kind of witness: Y excludes, and so does Y^2
    fr, g = xyt
    gp = graded_presentation_bounded(fr, 4)
    gm = GliderGradedModule(graded_glider(g), gp)
    v1 = strong_char_excludes(gm, fr.ring.parse("Y"), 2)
    v2 = strong_char_excludes(gm, fr.ring.parse("Y^2"), 2)
    assert v1.status == "excluded" and v2.status == "excluded"
    assert v1.witness[1] == v2.witness[1]


# ------------------------------------------------------- smoothness detector


def test_smoothness_glider_cusp():
    ring = QRP.free(("T",))
    rep = smoothness_glider(ring, [ring.parse("T^2"), ring.parse("T^3")],
                            ring.parse("T^2"), ring.parse("T"), ring.parse("T"))
    assert rep.exclusion.status == "excluded"
    # the chain is M_n = T^n Q[T] inside the cusp-filtered line
    assert rep.glider.span(2).contains({(2,): 1})
    assert rep.glider.span(2).contains({(1,): 1}) is False


def test_smoothness_glider_rejects_invertible_factor():
    ring = QRP.free(("T", "Y"))
    with pytest.raises(ValueError, match="constant term"):
        smoothness_glider(ring, [ring.parse("T")], ring.parse("Y"),
                          ring.parse("Y"), ring.one())


def test_smoothness_glider_rejects_wrong_product():
    ring = QRP.free(("T",))
    with pytest.raises(ValueError, match="multiply"):
        smoothness_glider(ring, [ring.parse("T^2")], ring.parse("T^2"),
                          ring.parse("T"), ring.parse("T^2"))


def test_smoothness_glider_xyt_matches_example(xyt):
    fr_ref, g_ref = xyt
    ctx = ("X", "Y", "T")
    ring = QRP(ctx, Ideal.parse(ctx, ["X*Y - T"]))
    rep = smoothness_glider(ring, [ring.parse("T")], ring.parse("T"),
                            ring.parse("Y"), ring.parse("X"))
    # same chain spans as the reference chain M_0 = Q[T,Y] ⊃ (Y) ⊃ (Y)^2 ...
    for d in range(0, 4):
        ref = g_ref.span(d)
        got = rep.glider.span(d)
        assert all(got.contains(r) for r in ref.rows)
        assert all(ref.contains(r) for r in got.rows)
    assert rep.exclusion.status == "excluded"
