"""Exact workbench for filtered rings, gliders, localization, and torsion sheaves.

Everything is computed over the rationals with exact arithmetic.  Analyses
that are undecidable in general (membership in infinitely generated objects,
degrees of localized elements, torsion detection) are run up to explicit
bounds and report ``inconclusive`` rather than guessing.
"""

from gliderlab.poly import Polynomial, grevlex_key, lex_key
from gliderlab.ideals import Ideal
from gliderlab.quotient import QuotientRingPresentation
from gliderlab.filtered import FilteredRing, graded_presentation_bounded
from gliderlab.gliders import Chain, build_glider

__all__ = [
    "Polynomial",
    "Ideal",
    "grevlex_key",
    "lex_key",
    "QuotientRingPresentation",
    "FilteredRing",
    "graded_presentation_bounded",
    "Chain",
    "build_glider",
]
__version__ = "0.1.0"
