"""Tests for the kernel-functor lattice, covers, sheaf axioms, and words."""

import itertools
import time

import pytest

from conftest import plane_ring, xyt_chain, xyt_ring
from gliderlab.filtered import FilteredModule
from gliderlab.gliders import build_glider
from gliderlab.ideals import Ideal
from gliderlab.localization import Frac
from gliderlab.poly import Polynomial
from gliderlab.sheaves import (
    BasisOpen,
    SymKernelFunctor,
    Word,
    filter_leq_oracle,
    gen_topology_ops,
    is_cover,
    kf_compare,
    schematic_check_commutative,
    schematic_check_weyl,
    section_on_open,
    serre_global_sections_check,
    sheaf_axiom_check,
    word_lemma_check,
    word_morphism_exists,
)
from gliderlab.weyl import WeylElement

CTX = ("X", "Y")


def kf(*gens: str) -> SymKernelFunctor:
    return SymKernelFunctor(Ideal.parse(CTX, list(gens)))


# ------------------------------------------------------------- the lattice


def test_origin_below_line():
    # torsion supported at the origin is torsion supported on the line
    assert kf_compare(kf("X", "Y"), kf("X"), "leq")
    assert not kf_compare(kf("X"), kf("X", "Y"), "leq")


def test_same_radical_same_functor():
    assert kf_compare(kf("X^2"), kf("X"), "leq")
    assert kf_compare(kf("X"), kf("X^2"), "leq")
    assert kf("X^2") == kf("X")


def test_meet_and_join():
    meet = kf_compare(kf("X"), kf("Y"), "meet")
    assert meet == kf("X", "Y")
    join = kf_compare(kf("X"), kf("Y"), "join")
    assert join == kf("X*Y")


def test_lattice_agrees_with_filter_oracle_exhaustive():
    """Foundation test: the radical calculus equals brute-force filter
    containment on every pair of subset-generated ideals of the pool."""
    pool = ["X", "Y", "X^2", "X*Y", "Y^2", "X + Y"]
    ideals = []
    seen = set()
    for r in range(1, len(pool) + 1):
        for combo in itertools.combinations(pool, r):
            ideal = Ideal.parse(CTX, list(combo))
            sig = ideal.signature()
            if sig in seen:
                continue
            seen.add(sig)
            ideals.append(ideal)
    start = time.monotonic()
    disagreements = []
    for a in ideals:
        for b in ideals:
            ka, kb = SymKernelFunctor(a), SymKernelFunctor(b)
            radical_says = kf_compare(ka, kb, "leq")
            oracle_says = filter_leq_oracle(ka, kb)
            if radical_says != oracle_says:
                disagreements.append((a.gens, b.gens, radical_says, oracle_says))
    elapsed = time.monotonic() - start
    assert not disagreements, disagreements[:5]
    assert elapsed < 30.0, f"lattice oracle sweep took {elapsed:.1f}s"


# ------------------------------------------------------------------ covers


def test_two_chart_cover_of_origin():
    assert is_cover(BasisOpen(Ideal.parse(CTX, ["X", "Y"])),
                    [BasisOpen(Ideal.parse(CTX, ["X"])), BasisOpen(Ideal.parse(CTX, ["Y"]))])


def test_single_element_cover_same_radical():
    assert is_cover(BasisOpen(Ideal.parse(CTX, ["X"])),
                    [BasisOpen(Ideal.parse(CTX, ["X^2"]))])


def test_cover_fails_on_smaller_open():
    assert not is_cover(BasisOpen(Ideal.parse(CTX, ["X"])),
                        [BasisOpen(Ideal.parse(CTX, ["X*Y"]))])


def test_empty_cover_rejected():
    with pytest.raises(ValueError):
        is_cover(BasisOpen(Ideal.parse(CTX, ["X"])), [])


def test_basis_open_inclusion_reverses_functor_order():
    small = BasisOpen(Ideal.parse(CTX, ["X*Y"]))
    big = BasisOpen(Ideal.parse(CTX, ["X"]))
    assert small.subset_of(big)
    assert not big.subset_of(small)


# ------------------------------------------------------------------ words


def test_word_morphisms():
    x = "X"
    y = "Y"
    assert word_morphism_exists(Word((x,)), Word((x, y)))
    assert word_morphism_exists(Word((x, y)), Word((x, x, y)))
    assert not word_morphism_exists(Word((y, x)), Word((x, y)))
    # reflexive and transitive on words of length <= 4
    words = [Word(w) for r in range(1, 4) for w in itertools.product((x, y), repeat=r)]
    for w in words:
        assert word_morphism_exists(w, w)
    for a in words:
        for b in words:
            for c in words:
                if word_morphism_exists(a, b) and word_morphism_exists(b, c):
                    assert word_morphism_exists(a, c)


def test_word_lemma_two_variables():
    fr = plane_ring()
    outcomes = word_lemma_check(fr.ring, [fr.ring.parse("X"), fr.ring.parse("Y")])
    assert all(o.ok for o in outcomes), outcomes


def test_word_lemma_repeated_letter():
    fr = plane_ring()
    outcomes = word_lemma_check(fr.ring, [fr.ring.parse("X"), fr.ring.parse("X")])
    assert all(o.ok for o in outcomes)


# ---------------------------------------------------------------- sections


def test_section_on_principal_open():
    fr = plane_ring()
    fmod = FilteredModule(fr)
    sec = section_on_open(fmod, BasisOpen(Ideal.parse(CTX, ["X"])))
    d = sec.degree(Frac(fr.ring, fr.ring.one(), ((fr.ring.parse("X"), 2),)))
    assert d.value == -2


def test_section_on_trivial_word_is_module():
    fr = plane_ring()
    fmod = FilteredModule(fr)
    sec = section_on_open(fmod, Word(()))
    assert sec.loc is None
    assert sec.degree(fr.ring.parse("X*Y")) == 2


def test_section_on_nonprincipal_open_rejected():
    fr = plane_ring()
    with pytest.raises(ValueError):
        section_on_open(FilteredModule(fr), BasisOpen(Ideal.parse(CTX, ["X", "Y"])))


def test_xyt_glider_section_contains_body(xyt):
    fr, g = xyt
    sec = section_on_open(g.module, Word((fr.ring.parse("Y"),)))
    # the localized fragment has a body: K[Y] classes diverge below every level
    assert sec.degree(fr.ring.one()).below_bound
    assert sec.degree(fr.ring.parse("Y")).below_bound


# ------------------------------------------------------------- sheaf axioms


def test_sheaf_axioms_two_chart_cover():
    fr = plane_ring()
    fmod = FilteredModule(fr)
    parts = [BasisOpen(Ideal.parse(CTX, ["X"])), BasisOpen(Ideal.parse(CTX, ["Y"]))]
    outcomes = sheaf_axiom_check(fmod, parts, samples=20)
    bad = [o for o in outcomes if not o.ok]
    assert not bad, bad


# ---------------------------------------------------------------- schematic


def test_weyl_schematic_all_small_choices():
    x, d = WeylElement.x(), WeylElement.d()
    choices = [(x ** a, d ** b) for a in range(1, 4) for b in range(1, 4)]
    verdict = schematic_check_weyl(choices)
    assert verdict.ok
    for (_, witness) in verdict.witnesses:
        assert witness.member


def test_commutative_ring_not_schematic_this_way():
    fr = plane_ring()
    choices = [(fr.ring.parse("X^2"), fr.ring.parse("Y"))]
    assert not schematic_check_commutative(fr.ring, choices).ok


def test_choice_containing_one_passes():
    fr = plane_ring()
    assert schematic_check_commutative(fr.ring, [(fr.ring.one(), fr.ring.parse("Y"))]).ok


# ------------------------------------------------------------ global sections


def test_serre_plane():
    fr = plane_ring()
    outcomes = serre_global_sections_check(FilteredModule(fr),
                                           [fr.ring.parse("X"), fr.ring.parse("Y")])
    assert all(o.ok for o in outcomes), outcomes


def test_serre_xyt_glider(xyt):
    fr, g = xyt
    outcomes = serre_global_sections_check(g.module,
                                           [fr.ring.parse("X"), fr.ring.parse("Y")])
    assert all(o.ok for o in outcomes), outcomes


# ------------------------------------------------------------- gen-topology


def test_gen_topology_identities():
    functors = [kf("X"), kf("Y"), kf("X", "Y"), kf("X*Y")]
    outcomes = gen_topology_ops(functors)
    assert all(o.ok for o in outcomes), outcomes
