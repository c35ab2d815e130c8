"""Tests for chains, fragment axioms, star chains, bodies, graded fragments."""

import pytest

from conftest import cusp_chain, cusp_ring, laurent_chain, laurent_ring, xyt_chain, xyt_ring
from gliderlab.filtered import _poly_vec, glider_filtration
from gliderlab.gliders import (
    Chain,
    body,
    build_glider,
    check_fragment_axioms,
    graded_glider,
    star_chain,
)


def test_chain_tail_policies():
    fr = laurent_ring()
    c = Chain([[fr.ring.one()], [fr.ring.parse("V")]], tail="repeat")
    assert c.level_gens(5) == c.level_gens(1)
    z = Chain([[fr.ring.one()]], tail="zero")
    assert z.level_gens(3) == []
    with pytest.raises(ValueError):
        Chain([[fr.ring.one()]], tail="bogus")


def test_build_glider_rejects_non_descending():
    fr = laurent_ring()
    r = fr.ring
    bad = Chain([[r.parse("V")], [r.one()]])  # 1 is not in V·Q[V]
    with pytest.raises(ValueError):
        build_glider(fr, bad)


def test_cusp_fragment_axioms(cusp):
    fr, g = cusp
    rep = check_fragment_axioms(g)
    assert rep.descending and rep.axioms_ok, rep.failures
    # 1 is in M_0 but not in F_1·M_1, so the chain is not standard
    assert not rep.standard


def test_xyt_fragment_axioms(xyt):
    fr, g = xyt
    rep = check_fragment_axioms(g)
    assert rep.descending and rep.axioms_ok, rep.failures
    assert not rep.standard


def test_laurent_fragment_is_standard(laurent):
    fr, g = laurent
    rep = check_fragment_axioms(g)
    assert rep.descending and rep.axioms_ok, rep.failures
    # strong filtration: F_1·M_n = M_{n-1} on the nose
    assert rep.standard


def test_star_chain_contains_chain(laurent):
    fr, g = laurent
    stars = star_chain(g)
    gd = 1
    for i in range(1, g.depth + 1):
        cap = fr.bound - i * gd
        for r in g.span(i).rows:
            if max(sum(k) for k in r) <= cap:
                assert stars[i].contains(r)


def test_star_chain_natural_for_strong_filtration(laurent):
    # for the degree-zero-part chain the star chain adds nothing:
    # F_i · U^{-k} ∋ U^{i-k}, which escapes M_0 unless k >= i
    fr, g = laurent
    stars = star_chain(g)
    for i in range(1, 4):
        for r in stars[i].rows:
            assert g.span(i).contains(r)


def test_cusp_body_empty_signal(cusp):
    fr, g = cusp
    rep = body(g)
    # the levels keep shrinking through the whole window: no stabilized body
    assert not (rep.stabilized and rep.rows)


def test_xyt_body_empty_signal(xyt):
    fr, g = xyt
    rep = body(g)
    assert not (rep.stabilized and rep.rows)


def test_constant_chain_body_is_everything():
    fr = laurent_ring()
    r = fr.ring
    g = build_glider(fr, Chain([[r.parse("V")], [r.parse("V")], [r.parse("V")]]))
    rep = body(g)
    assert rep.stabilized
    assert len(rep.rows) == len(g.span(0).rows)


def test_graded_fragment_levels(xyt):
    fr, g = xyt
    gg = graded_glider(g)
    # M_n/M_{n+1} is free of rank one over Q[T] on the class of Y^n
    lvl1 = gg.level_basis(1)
    r = fr.ring
    assert any(vec == _poly_vec(r.parse("Y")) for vec in lvl1)
    assert all(min(k[0] for k in vec) == 0 for vec in lvl1)  # no X appears


def test_graded_fragment_torsion(xyt):
    fr, g = xyt
    r = fr.ring
    gg = graded_glider(g)
    # the symbol of Y annihilates the whole graded fragment ...
    w = gg.torsion_witness(r.parse("Y"), 1)
    assert w is not None and w[0] == 0 and str(w[1]) == "1"
    assert gg.kills_all(r.parse("Y"), 1) is True
    # ... but the symbol of X acts nontrivially (X·Y^n = T·Y^(n-1))
    assert gg.torsion_witness(r.parse("X"), 1) is None
    assert gg.kills_all(r.parse("X"), 1) is False


def test_graded_fragment_torsion_free_laurent(laurent):
    fr, g = laurent
    gg = graded_glider(g)
    assert gg.torsion_witness(fr.ring.parse("U"), 1) is None


def test_glider_filtration_degrees(xyt):
    fr, g = xyt
    r = fr.ring
    fm = glider_filtration(fr, g.chain)
    assert fm.fdeg(r.one()) == 0
    assert fm.fdeg(r.parse("Y^3")) == -3
    assert fm.fdeg(r.parse("T*Y")) == -1      # T·Y is in M_1 but not M_2
    assert fm.fdeg(r.parse("X")) == 1         # needs one ring generator
    assert fm.fdeg(r.parse("X^2")) == 2


def test_glider_filtration_degrees_cusp(cusp):
    fr, g = cusp
    r = fr.ring
    fm = glider_filtration(fr, g.chain)
    assert fm.fdeg(r.parse("X^2")) == -1
    assert fm.fdeg(r.parse("X^4")) == -1
    assert fm.fdeg(r.parse("X^7")) == -4
    assert fm.fdeg(r.parse("X")) == 1
