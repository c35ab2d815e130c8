"""Characteristic varieties, exclusion witnesses, and the smoothness detector.

The characteristic variety of a filtered module is the zero set of the
annihilator of its associated graded module; the strong variety keeps only
the torsion data whose filter misses every graded annihilating ideal.
In-variety verdicts are bounded semi-decisions; exclusions are certificates
(a homogeneous element outside the datum that kills a nonzero class).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from gliderlab.filtered import FilteredRing, GradedPresentation, graded_presentation_bounded
from gliderlab.gliders import Chain, GradedGlider, Glider, build_glider, graded_glider
from gliderlab.ideals import Ideal, radical_membership
from gliderlab.poly import Polynomial, grevlex_key, monomials_up_to
from gliderlab.quotient import QuotientRingPresentation
from gliderlab.weyl import SYMBOL_CTX, WeylLeftIdeal, gr_left_ideal_bounded


@dataclass
class WeylCyclicModule:
    """The cyclic module A_1 / I with a choice of filtration."""

    ideal: WeylLeftIdeal
    filtration: str = "order"
    _ann_cache: dict = field(default_factory=dict, repr=False)


@dataclass
class GliderGradedModule:
    """A glider's graded fragment together with the ambient graded presentation."""

    gg: GradedGlider
    gp: GradedPresentation


def graded_annihilator_bounded(gm, bound: int = 6) -> Ideal:
    """Annihilator ideal of the graded module, exact for cyclic Weyl modules
    (the symbol ideal itself), bounded search otherwise."""
    if isinstance(gm, WeylCyclicModule):
        if not gm.ideal.gens:
            return Ideal(SYMBOL_CTX, [Polynomial.zero(SYMBOL_CTX)])
        if bound not in gm._ann_cache:
            gm._ann_cache[bound] = gr_left_ideal_bounded(gm.ideal, gm.filtration, bound).ideal
        return gm._ann_cache[bound]
    if isinstance(gm, GliderGradedModule):
        gg, gp = gm.gg, gm.gp
        ring = gg.fr.ring
        gens = []
        cap = min(bound, max(2, gg.B // 3))
        for mono in monomials_up_to(len(ring.ctx), cap):
            r = ring.nf(Polynomial.from_monomial(ring.ctx, mono))
            if r.is_zero() or r == ring.one():
                continue
            d = gg.fr.f_degree(r, gg.B)
            if d is None:
                continue
            if gg.kills_all(r, d) is True:
                sym = gp.sigma(r)
                if sym is not None and not sym.is_zero():
                    gens.append(sym.poly)
        ideal = Ideal(gp.symbols, gens or [Polynomial.zero(gp.symbols)])
        reduced = list(ideal.groebner())
        return Ideal(gp.symbols, reduced or [Polynomial.zero(gp.symbols)])
    raise TypeError(f"unsupported graded module data {type(gm).__name__}")


@dataclass
class CharVarietyReport:
    """Annihilator of G(M) with per-datum membership verdicts."""

    annihilator: Ideal
    verdicts: list = field(default_factory=list)  # (datum string, verdict string)
    bound: int = 0


def char_variety(gm, primes: list, bound: int = 6) -> CharVarietyReport:
    """Membership of each prime's zero set in the characteristic variety.

    V(P) ⊆ V(Ann) — i.e. P is a point of χ(M) — iff every generator of the
    annihilator lies in the radical of P.
    """
    ann = graded_annihilator_bounded(gm, bound)
    report = CharVarietyReport(ann, bound=bound)
    for p in primes:
        if ann.is_zero():
            inside = True  # zero annihilator: the variety is everything
        else:
            inside = all(radical_membership(p, g) for g in ann.gens)
        report.verdicts.append((f"({', '.join(str(g) for g in p.gens)})",
                                "in-chi" if inside else "not-in-chi"))
    return report


@dataclass
class ExclusionVerdict:
    """Outcome of the strong-variety search for one torsion datum.

    ``excluded`` carries a witness pair (g, m): g outside the datum with
    g·m = 0 and m a nonzero class.  The positive verdict is only
    "in-xi-up-to" the bound — no unbounded membership claim is possible.
    """

    status: str                      # "excluded" | "in-xi-up-to"
    witness: Optional[tuple] = None  # (annihilating element, killed class) as strings
    bound: int = 0


def strong_char_excludes(gm, datum, bound: int = 2) -> ExclusionVerdict:
    """Search for a homogeneous g avoiding the datum that kills a nonzero class.

    For a Weyl cyclic module the datum is a prime ideal in the symbol ring;
    for a glider the datum is a localizing element whose symbol generates the
    functor's filter.  Witnesses are found lowest degree first.
    """
    if isinstance(gm, WeylCyclicModule):
        return _weyl_exclusion(gm, datum, bound)
    if isinstance(gm, GliderGradedModule):
        return _glider_exclusion(gm, datum, bound)
    raise TypeError(f"unsupported graded module data {type(gm).__name__}")


def _weyl_exclusion(gm: WeylCyclicModule, prime: Ideal, bound: int) -> ExclusionVerdict:
    gr = graded_annihilator_bounded(gm, bound + 4)
    qr = QuotientRingPresentation(SYMBOL_CTX, gr)
    classes = [m for m in qr.monomial_basis(bound) if sum(m) > 0 or m == ()]
    for mono in sorted(monomials_up_to(len(SYMBOL_CTX), bound), key=grevlex_key):
        g = Polynomial.from_monomial(SYMBOL_CTX, mono)
        if g == Polynomial.one(SYMBOL_CTX) or prime.contains(g):
            continue
        for cm in sorted(classes, key=grevlex_key):
            m = Polynomial.from_monomial(SYMBOL_CTX, cm)
            if qr.nf(m).is_zero():
                continue
            if qr.nf(g * m).is_zero():
                return ExclusionVerdict("excluded", (str(g), str(m)), bound)
    return ExclusionVerdict("in-xi-up-to", None, bound)


def _glider_exclusion(gm: GliderGradedModule, s: Polynomial, bound: int) -> ExclusionVerdict:
    gg, gp = gm.gg, gm.gp
    s = gg.fr.ring.nf(s)
    d = gg.fr.f_degree(s, gg.B)
    if d is None:
        return ExclusionVerdict("in-xi-up-to", None, bound)
    # powers of the localizing element generate the functor's filter
    power = gg.fr.ring.one()
    for n in range(1, bound + 1):
        power = gg.fr.ring.nf(power * s)
        w = gg.torsion_witness(power, n * d)
        if w is not None:
            sym = gp.sigma(power)
            label = str(sym.poly) if sym is not None else f"sigma({power})"
            return ExclusionVerdict("excluded", (label, str(w[1])), bound)
    return ExclusionVerdict("in-xi-up-to", None, bound)


@dataclass
class SmoothnessReport:
    """Glider built from a zero-constant factorization, with its exclusion."""

    glider: Glider
    fr: FilteredRing
    exclusion: ExclusionVerdict


def smoothness_glider(ring: QuotientRingPresentation, subring_gens: list,
                      target: Polynomial, f: Polynomial, g: Polynomial,
                      extra_gens: list = (), depth: int = 6,
                      bound: Optional[int] = None) -> SmoothnessReport:
    """Build the chain  S[f] ⊃ (f) ⊃ (f)² ⊃ ...  from a factorization of a
    tangent-degenerate generator, and certify the strong variety is proper.

    The factorization f·g = target must have both factors without constant
    term — an invertible factor means the generator is not degenerate and
    the construction (correctly) refuses to produce a glider.
    """
    f = ring.nf(f)
    g = ring.nf(g)
    target = ring.nf(target)
    if ring.nf(f * g) != target:
        raise ValueError("factorization does not multiply to the designated generator")
    if f.constant_term() != 0 or g.constant_term() != 0:
        raise ValueError("factors must have zero constant term (degenerate generator)")
    filt = []
    for h in [f, g, *extra_gens]:
        h = ring.nf(h)
        if h not in filt:
            filt.append(h)
    fr = FilteredRing(ring, [ring.nf(s) for s in subring_gens], filt, bound=bound)
    B = fr.bound
    fdeg = max(1, f.total_degree())
    levels = []
    for n in range(depth + 1):
        gens = []
        for j in range(0, B // fdeg + 1):
            p = ring.nf(ring.power(f, n + j))
            if not p.is_zero() and p.total_degree() <= B and p not in gens:
                gens.append(p)
        levels.append(gens)
    glider = build_glider(fr, Chain(levels, tail="zero"))
    gp = graded_presentation_bounded(fr, min(6, B))
    gm = GliderGradedModule(graded_glider(glider), gp)
    exclusion = strong_char_excludes(gm, f, bound=2)
    return SmoothnessReport(glider, fr, exclusion)
