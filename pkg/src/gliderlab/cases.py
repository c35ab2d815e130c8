"""Named case studies wiring the library's checks into reports."""

from __future__ import annotations

import itertools
from typing import Optional

from gliderlab.charvariety import (
    WeylCyclicModule,
    char_variety,
    smoothness_glider,
    strong_char_excludes,
)
from gliderlab.filtered import FilteredModule, FilteredRing, graded_presentation_bounded
from gliderlab.gliders import Chain, body, build_glider, check_fragment_axioms
from gliderlab.ideals import Ideal
from gliderlab.localization import (
    KernelFunctorIdeal,
    MultiplicativeSet,
    glider_localize,
    kappa_separated_bounded,
    ring_torsion_bounded,
    tower_quotient_filtration,
    word_compose_commutative,
)
from gliderlab.quotient import QuotientRingPresentation as QRP
from gliderlab.report import Report
from gliderlab.sheaves import (
    BasisOpen,
    SymKernelFunctor,
    filter_leq_oracle,
    is_cover,
    kf_compare,
    schematic_check_weyl,
    serre_global_sections_check,
    sheaf_axiom_check,
    word_lemma_check,
)
from gliderlab.weyl import SYMBOL_CTX, WeylElement, WeylLeftIdeal, gr_left_ideal_bounded


class ConfigError(ValueError):
    """Raised for unknown cases or malformed bounds."""


def _bounds(config: Optional[dict], B: int, depth: int, power: int = 4) -> dict:
    out = {"B": B, "depth": depth, "power": power}
    for k, v in (config or {}).items():
        if k not in out:
            raise ConfigError(f"unknown bound {k!r}")
        if not isinstance(v, int) or v <= 0:
            raise ConfigError(f"bound {k} must be a positive integer")
        out[k] = v
    return out


def _bounded(ok: bool, conclusive: bool):
    """Demote a negative verdict to inconclusive when the bound was too small.

    Positive verdicts are witnessed and stand; a failed search only counts
    as a failure when the scan window could actually have found a witness.
    """
    if ok:
        return True
    return False if conclusive else None


# ------------------------------------------------------------------ models


def _cusp_model(B: int, depth: int):
    ring = QRP.free(("X",))
    fr = FilteredRing(ring, [ring.parse("X^2"), ring.parse("X^3")], [ring.parse("X")], bound=B)
    levels = [[ring.one()], [ring.parse("X^2"), ring.parse("X^4"), ring.parse("X^5")]]
    for n in range(2, depth + 1):
        levels.append([ring.parse(f"X^{n + 3}"), ring.parse(f"X^{n + 4}")])
    return fr, build_glider(fr, Chain(levels, tail="zero"))


def _xyt_model(B: int, depth: int, chain_var: str = "Y"):
    ctx = ("X", "Y", "T")
    ring = QRP(ctx, Ideal.parse(ctx, ["X*Y - T"]))
    fr = FilteredRing(ring, [ring.parse("T")], [ring.parse("X"), ring.parse("Y")], bound=B)
    levels = []
    for n in range(depth + 1):
        gens = [ring.parse(f"{chain_var}^{n + j}") if n + j else ring.one()
                for j in range(B + 1) if n + j <= B]
        levels.append(gens)
    return fr, build_glider(fr, Chain(levels, tail="zero"))


# ------------------------------------------------------------------- cases


def _case_cusp(config) -> Report:
    b = _bounds(config, B=12, depth=10)
    rep = Report("cusp", b)
    fr, g = _cusp_model(b["B"], b["depth"])
    gp = graded_presentation_bounded(fr, 6)
    rels = gp.relation_strings()
    rep.add("graded presentation has a square-zero positive symbol",
            _bounded("e0^2" in rels and gp.positive_degree_symbols() == ["e0"],
                     conclusive=b["B"] >= 6),
            witness="; ".join(rels), anchor="cusp subring filtration, graded relations")
    frag = check_fragment_axioms(g)
    rep.add("chain satisfies the fragment axioms", frag.descending and frag.axioms_ok,
            witness="; ".join(frag.failures[:2]), anchor="cusp chain axioms")
    pre = body(g)
    rep.add("pre-localization body is zero", not (pre.stabilized and pre.rows),
            anchor="cusp chain keeps shrinking")
    loc = glider_localize(g, MultiplicativeSet(fr, fr.ring.parse("X")), depth=b["depth"])
    d = loc.degrees.get("X^4")
    witnesses = d.witnesses if d else []
    rep.add("localized body contains X^4",
            _bounded("X^4" in loc.body_elements, conclusive=len(witnesses) >= 3),
            witness=f"witness degrees {[v for _, v in witnesses][:7]}",
            anchor="localized cusp chain acquires a body")
    return rep


def _case_xyt(config) -> Report:
    b = _bounds(config, B=8, depth=10)
    rep = Report("xyt", b)
    fr, g = _xyt_model(b["B"], b["depth"])
    gp = graded_presentation_bounded(fr, 4)
    rep.add("graded relation: product of the two degree-1 symbols vanishes",
            _bounded(gp.relation_strings() == ["e0*e1"], conclusive=b["B"] >= 4),
            witness="; ".join(gp.relation_strings()),
            anchor="surface X*Y = T, symbols collide into the subring")
    pre = body(g)
    rep.add("chain is bodyless before localizing", not (pre.stabilized and pre.rows),
            anchor="powers of one coordinate intersect to zero")
    conclusive = b["B"] >= 6  # the divergence trend needs a few witness powers
    loc = glider_localize(g, MultiplicativeSet(fr, fr.ring.parse("Y")), depth=b["depth"])
    rep.add("localized body at the chain variable contains 1, Y, Y^2",
            _bounded(all(e in loc.body_elements for e in ("1", "Y", "Y^2")), conclusive),
            witness=", ".join(loc.body_elements[:5]),
            anchor="localized fragment contains the coordinate subring")
    fr2, g2 = _xyt_model(b["B"], b["depth"], chain_var="X")
    loc2 = glider_localize(g2, MultiplicativeSet(fr2, fr2.ring.parse("X")), depth=b["depth"])
    rep.add("symmetric variant passes with roles exchanged",
            _bounded(all(e in loc2.body_elements for e in ("1", "X", "X^2")), conclusive),
            witness=", ".join(loc2.body_elements[:5]),
            anchor="the two coordinates play symmetric roles")
    return rep


def _case_weyl(config) -> Report:
    b = _bounds(config, B=6, depth=6)
    rep = Report("weyl-holonomic", b)
    ideal = WeylLeftIdeal([WeylElement.x() * WeylElement.d()])
    gm = WeylCyclicModule(ideal, "order")
    gr = gr_left_ideal_bounded(ideal, "order", b["B"])
    rep.add("symbol ideal of the cyclic module is (x*xi)",
            _bounded([str(g) for g in gr.ideal.gens] == ["x*xi"], conclusive=b["B"] >= 2),
            witness="; ".join(str(g) for g in gr.ideal.gens),
            anchor="order filtration symbol of x*d")
    cv = char_variety(gm, [Ideal.parse(SYMBOL_CTX, ["x"]), Ideal.parse(SYMBOL_CTX, ["x - 1"])])
    rep.add("(x) lies in the characteristic variety", cv.verdicts[0][1] == "in-chi",
            anchor="annihilator x*xi is contained in (x)")
    rep.add("(x - 1) lies outside the characteristic variety",
            cv.verdicts[1][1] == "not-in-chi",
            anchor="x*xi avoids the shifted point")
    v = strong_char_excludes(gm, Ideal.parse(SYMBOL_CTX, ["x"]), 2)
    rep.add("(x) excluded from the strong variety with witness (xi, x)",
            v.status == "excluded" and v.witness == ("xi", "x"),
            witness=str(v.witness), anchor="xi kills the class of x")
    return rep


def _case_smooth(config) -> Report:
    b = _bounds(config, B=12, depth=6)
    rep = Report("smooth-detector", b)
    ring = QRP.free(("T",))
    built = smoothness_glider(ring, [ring.parse("T^2"), ring.parse("T^3")],
                              ring.parse("T^2"), ring.parse("T"), ring.parse("T"),
                              depth=b["depth"], bound=b["B"])
    rep.add("singular tower yields a glider with proper strong variety",
            built.exclusion.status == "excluded",
            witness=str(built.exclusion.witness),
            anchor="zero-constant factorization of the degenerate generator")
    ring2 = QRP.free(("T", "Y"))
    try:
        smoothness_glider(ring2, [ring2.parse("T")], ring2.parse("Y"),
                          ring2.parse("Y"), ring2.one())
        rejected = False
    except ValueError:
        rejected = True
    rep.add("smooth instance rejected (no zero-constant factorization)", rejected,
            anchor="invertible factor means no tangent degeneration")
    return rep


def _case_tower(config) -> Report:
    b = _bounds(config, B=8, depth=6)
    rep = Report("tower", b)
    ring = QRP.free(("T", "Y"))
    fr = FilteredRing(ring, [ring.parse("T")], [], mode="tower",
                      tower_levels=[[ring.parse("T")], [ring.parse("T"), ring.parse("Y")]],
                      bound=b["B"])
    kf = KernelFunctorIdeal(fr, [ring.parse("T")])
    res = tower_quotient_filtration(fr, kf)
    rep.add("discreteness: no quotient degree below the tower length",
            res.discrete_ok, witness="; ".join(res.witnesses[:2]),
            anchor="two-step tower localized at the bottom ideal")
    rep.add("orthogonality: quotients by the levels are torsion-free",
            res.orthogonal_ok, witness="; ".join(res.witnesses[:2]),
            anchor="no level element is pushed down by ideal powers")
    rep.add("strictness: embedded elements keep their tower degree",
            res.strict_ok, witness="; ".join(res.witnesses[:2]),
            anchor="the embedding into the localization is strict")
    return rep


def _case_lattice(config) -> Report:
    b = _bounds(config, B=8, depth=4)
    rep = Report("lattice", b)
    ctx = ("X", "Y")
    pool = ["X", "Y", "X^2", "X*Y", "Y^2", "X + Y"]
    ideals = []
    seen = set()
    for r in range(1, len(pool) + 1):
        for combo in itertools.combinations(pool, r):
            ideal = Ideal.parse(ctx, list(combo))
            sig = ideal.signature()
            if sig not in seen:
                seen.add(sig)
                ideals.append(ideal)
    disagreements = []
    for a in ideals:
        for c in ideals:
            ka, kc = SymKernelFunctor(a), SymKernelFunctor(c)
            if kf_compare(ka, kc, "leq") != filter_leq_oracle(ka, kc, b["power"]):
                disagreements.append((str(a.gens), str(c.gens)))
    rep.add(f"radical calculus matches the filter oracle on {len(ideals)}^2 pairs",
            not disagreements, witness="; ".join(map(str, disagreements[:3])),
            anchor="order on torsion functors via bounded ideal powers")
    meet = kf_compare(SymKernelFunctor(Ideal.parse(ctx, ["X"])),
                      SymKernelFunctor(Ideal.parse(ctx, ["Y"])), "meet")
    join = kf_compare(SymKernelFunctor(Ideal.parse(ctx, ["X"])),
                      SymKernelFunctor(Ideal.parse(ctx, ["Y"])), "join")
    rep.add("meet is the origin functor, join the union-curve functor",
            meet == SymKernelFunctor(Ideal.parse(ctx, ["X", "Y"]))
            and join == SymKernelFunctor(Ideal.parse(ctx, ["X*Y"])),
            anchor="lattice operations as ideal sum and intersection")
    return rep


def _case_sheaf(config) -> Report:
    b = _bounds(config, B=8, depth=4)
    rep = Report("sheaf", b)
    ctx = ("X", "Y")
    ring = QRP.free(ctx)
    fr = FilteredRing(ring, [], [ring.parse("X"), ring.parse("Y")], bound=b["B"])
    fmod = FilteredModule(fr)
    target = BasisOpen(Ideal.parse(ctx, ["X", "Y"]))
    parts = [BasisOpen(Ideal.parse(ctx, ["X"])), BasisOpen(Ideal.parse(ctx, ["Y"]))]
    rep.add("the two charts cover the punctured-origin open", is_cover(target, parts),
            anchor="radical of (X) + (Y) is the origin ideal")
    for outcome in sheaf_axiom_check(fmod, parts, samples=20):
        rep.add(outcome.name, outcome.ok, witness=outcome.witness,
                anchor="structure sheaf on the two-chart cover")
    # graded-torsion gap: localizing the hyperbola ring loses nothing,
    # but its graded ring has honest torsion
    hctx = ("X", "Y")
    hring = QRP(hctx, Ideal.parse(hctx, ["X*Y - 1"]))
    hfr = FilteredRing(hring, [], [hring.parse("X"), hring.parse("Y")], bound=b["B"])
    torsion = ring_torsion_bounded(hfr, MultiplicativeSet(hfr, hring.parse("X")))
    sep = kappa_separated_bounded(hfr, KernelFunctorIdeal(hfr, [hring.parse("X")]))
    rep.add("ring torsion vanishes while graded torsion does not",
            not torsion and sep.status == "not-separated",
            witness=sep.witness or "", anchor="hyperbola ring: graded kernel is strictly larger")
    return rep


def _case_words(config) -> Report:
    b = _bounds(config, B=8, depth=4)
    rep = Report("words", b)
    x, d = WeylElement.x(), WeylElement.d()
    choices = [(x ** a, d ** bb) for a in range(1, 4) for bb in range(1, 4)]
    verdict = schematic_check_weyl(choices)
    orders_ok = all(w.member and max((c.degree("order") for c in w.cofactors), default=0)
                    <= sum(max((i + j for i, j in ch.terms), default=0) for ch in choice)
                    for (choice, (_, w)) in zip(choices, verdict.witnesses))
    rep.add("operator algebra is schematic for all small choice tuples",
            verdict.ok and orders_ok,
            witness=f"{len(choices)} tuples",
            anchor="a commutator witness exists for every power pair")
    ring = QRP.free(("X", "Y"))
    outcomes = word_lemma_check(ring, [ring.parse("X"), ring.parse("Y")], b["power"])
    rep.add("word filter equals the product filter", all(o.ok for o in outcomes),
            anchor="mixed powers and product powers are mutually cofinal")
    fr = FilteredRing(ring, [], [ring.parse("X"), ring.parse("Y")], bound=b["B"])
    comp = word_compose_commutative(fr, [ring.parse("X"), ring.parse("Y")])
    rep.add("iterated localization equals the product-set localization",
            all(o.ok for o in comp),
            witness="; ".join(o.witness for o in comp if o.witness),
            anchor="twenty sampled fractions, both iteration orders")
    sg = serre_global_sections_check(FilteredModule(fr),
                                     [ring.parse("X"), ring.parse("Y")])
    for o in sg:
        rep.add(o.name, o.ok, witness=o.witness, anchor="two-chart global cover of the plane")
    fr2, g2 = _xyt_model(8, 10)
    sg2 = serre_global_sections_check(g2.module,
                                      [fr2.ring.parse("X"), fr2.ring.parse("Y")])
    for o in sg2:
        rep.add("glider " + o.name, o.ok, witness=o.witness,
                anchor="glider sections over the global cover")
    return rep


CASES = {
    "cusp": _case_cusp,
    "xyt": _case_xyt,
    "weyl-holonomic": _case_weyl,
    "smooth-detector": _case_smooth,
    "tower": _case_tower,
    "lattice": _case_lattice,
    "sheaf": _case_sheaf,
    "words": _case_words,
}


def run_case(name: str, config: Optional[dict] = None) -> Report:
    """Execute one named case and return its report."""
    if name not in CASES:
        raise ConfigError(f"unknown case {name!r}; known: {', '.join(sorted(CASES))}")
    return CASES[name](config)


def verify_suite(config: Optional[dict] = None) -> list:
    """Run every case in declaration order."""
    return [run_case(name, config) for name in CASES]
