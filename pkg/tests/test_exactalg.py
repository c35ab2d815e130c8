"""Tests for exact polynomial arithmetic, Groebner bases, and ideal calculus."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gliderlab.ideals import (
    Ideal,
    exact_div,
    groebner_normal_form,
    ideal_combine,
    ideal_power,
    radical_equal,
    radical_leq,
    radical_membership,
)
from gliderlab.poly import Polynomial, grevlex_key, lex_key, monomials_up_to

CTX = ("x", "y")


def p(text):
    return Polynomial.parse(CTX, text)


# ---------------------------------------------------------------- polynomials


def test_parse_and_print_round_trip():
    f = p("x^2*y - 3/4*x + 1")
    assert str(f) == "x^2*y - 3/4*x + 1"
    assert Polynomial.parse(CTX, str(f)) == f


def test_zero_is_empty_term_map():
    assert p("x - x").terms == {}
    assert p("0").is_zero()
    assert p("x - x").total_degree() == -1


def test_grevlex_print_order():
    # same total degree: x^2 > x*y > y^2 under grevlex
    f = p("y^2 + x^2 + x*y")
    assert str(f) == "x^2 + x*y + y^2"


def test_constant_and_coefficients_exact():
    f = p("1/3*x + 1/6*x")
    assert f == p("1/2*x")
    assert f.terms[(1, 0)] == Fraction(1, 2)


small_polys = st.builds(
    Polynomial,
    st.just(CTX),
    st.dictionaries(
        st.tuples(st.integers(0, 4), st.integers(0, 4)),
        st.fractions(min_value=-5, max_value=5),
        max_size=5,
    ),
)


@settings(max_examples=60, deadline=None)
@given(small_polys, small_polys)
def test_ring_commutativity(f, g):
    assert f + g == g + f
    assert f * g == g * f


@settings(max_examples=60, deadline=None)
@given(small_polys, small_polys, small_polys)
def test_ring_distributivity(f, g, h):
    assert f * (g + h) == f * g + f * h


@settings(max_examples=40, deadline=None)
@given(small_polys)
def test_no_zero_coefficients_stored(f):
    assert all(c != 0 for c in f.terms.values())
    assert (f - f).is_zero()


# ------------------------------------------------------------- Groebner bases


def test_groebner_circle_hyperbola():
    # oracle: sympy 1.14 grevlex basis of (x^2+y^2-1, x*y-1)
    I = Ideal.parse(CTX, ["x^2+y^2-1", "x*y-1"])
    assert [str(g) for g in I.groebner()] == ["x*y - 1", "x^2 + y^2 - 1", "y^3 + x - y"]


def test_groebner_classic_pair():
    # oracle: sympy 1.14 grevlex basis of (x^3-2xy, x^2y-2y^2+x)
    I = Ideal.parse(CTX, ["x^3-2*x*y", "x^2*y-2*y^2+x"])
    assert [str(g) for g in I.groebner()] == ["y^2 - 1/2*x", "x*y", "x^2"]


def test_normal_form_is_canonical():
    I = Ideal.parse(CTX, ["x*y-1"])
    f = p("x^2*y^2")
    assert I.normal_form(f) == p("1")
    assert I.contains(p("x*y - 1"))
    assert not I.contains(p("x"))


def test_normal_form_linearity():
    I = Ideal.parse(CTX, ["x^2+y^2-1", "x*y-1"])
    f, g = p("x^3 + y"), p("x*y^2 - 2")
    nf = I.normal_form
    assert nf(f + g) == nf(f) + nf(g)
    assert nf(nf(f)) == nf(f)


@settings(max_examples=25, deadline=None)
@given(small_polys, small_polys)
def test_normal_form_respects_products_mod_ideal(f, g):
    I = Ideal.parse(CTX, ["x*y-1"])
    nf = I.normal_form
    assert nf(f * g) == nf(nf(f) * nf(g))


def test_exact_div():
    assert exact_div(p("x^2*y + x*y^2"), p("x*y")) == p("x + y")
    with pytest.raises(ValueError):
        exact_div(p("x + 1"), p("y"))


# ------------------------------------------------------------ ideal calculus


def test_ideal_sum_product():
    I, J = Ideal.parse(CTX, ["x"]), Ideal.parse(CTX, ["y"])
    assert ideal_combine(I, J, "sum").groebner() == Ideal.parse(CTX, ["x", "y"]).groebner()
    assert [str(g) for g in ideal_combine(I, J, "product").groebner()] == ["x*y"]


def test_ideal_intersection_oracle():
    # oracle: elimination in sympy gives (x) ∩ (y) = (xy)
    I, J = Ideal.parse(CTX, ["x"]), Ideal.parse(CTX, ["y"])
    assert [str(g) for g in ideal_combine(I, J, "intersection").groebner()] == ["x*y"]


def test_ideal_colon_oracle():
    # oracle: (x^2 y) : (x) = (x y)
    I, J = Ideal.parse(CTX, ["x^2*y"]), Ideal.parse(CTX, ["x"])
    assert [str(g) for g in ideal_combine(I, J, "colon").groebner()] == ["x*y"]


def test_colon_recovers_after_product():
    I = Ideal.parse(CTX, ["x^2", "x*y"])
    f = Ideal.parse(CTX, ["x"])
    prod = ideal_combine(I, f, "product")
    back = ideal_combine(prod, f, "colon")
    assert back.groebner() == I.groebner()


def test_ideal_power():
    I = Ideal.parse(CTX, ["x", "y"])
    I3 = ideal_power(I, 3)
    assert I3.contains(p("x^2*y"))
    assert not I3.contains(p("x*y"))


def test_radical_membership_oracle():
    # oracles: x in sqrt(x^2); y not in sqrt(x^2); x+y in sqrt(x^2, y^2)
    assert radical_membership(Ideal.parse(CTX, ["x^2"]), p("x"))
    assert not radical_membership(Ideal.parse(CTX, ["x^2"]), p("y"))
    assert radical_membership(Ideal.parse(CTX, ["x^2", "y^2"]), p("x+y"))


def test_radical_equal():
    assert radical_equal(Ideal.parse(CTX, ["x^2"]), Ideal.parse(CTX, ["x"]))
    assert radical_equal(Ideal.parse(CTX, ["x", "y"]), Ideal.parse(CTX, ["x^2", "x*y", "y^2"]))
    assert not radical_equal(Ideal.parse(CTX, ["x"]), Ideal.parse(CTX, ["y"]))


def test_radical_leq_direction():
    # sqrt(x^2) = (x) ⊆ (x, y) = sqrt((x^2, y^2))
    assert radical_leq(Ideal.parse(CTX, ["x^2"]), Ideal.parse(CTX, ["x^2", "y^2"]))
    assert not radical_leq(Ideal.parse(CTX, ["x^2", "y^2"]), Ideal.parse(CTX, ["x^2"]))


def test_membership_invariant_under_generator_shuffle():
    gens = ["x^2+y^2-1", "x*y-1", "x^3"]
    I = Ideal.parse(CTX, gens)
    J = Ideal.parse(CTX, list(reversed(gens)))
    probes = [p("x^4"), p("y^3 + x - y"), p("x + y"), p("x*y*x*y - 1")]
    for f in probes:
        assert I.contains(f) == J.contains(f)


def test_groebner_deterministic():
    gens = ["x^2+y^2-1", "x*y-1"]
    a = [str(g) for g in Ideal.parse(CTX, gens).groebner()]
    b = [str(g) for g in Ideal.parse(CTX, gens).groebner()]
    assert a == b


def test_monomials_up_to():
    ms = monomials_up_to(2, 2)
    assert len(ms) == 6
    assert ms[0] == (0, 0)


def test_lex_vs_grevlex_leading_terms():
    f = p("x*y^2 + x^2")
    assert f.leading(grevlex_key)[0] == (1, 2)
    assert f.leading(lex_key)[0] == (2, 0)
