"""Generated filtrations, degrees, and graded presentations.

The running model: Q[X] filtered over the subring Q[X^2, X^3] (the
coordinate ring of a cuspidal curve) with X generating level one.  The
associated graded ring picks up a square-zero symbol — the algebraic
shadow of the singularity.
"""

from gliderlab.filtered import FilteredRing, graded_presentation_bounded, sigma_map
from gliderlab.quotient import QuotientRingPresentation as QRP

ring = QRP.free(("X",))
fr = FilteredRing(ring, [ring.parse("X^2"), ring.parse("X^3")], [ring.parse("X")])

for s in ("X", "X^2", "X^5", "X + X^2"):
    print(f"degree of {s:<8} =", fr.f_degree(ring.parse(s)))

gp = graded_presentation_bounded(fr, 6)
print("\ngraded ring relations:", gp.relation_strings())
print("positive-degree symbols:", gp.positive_degree_symbols())

sx = sigma_map(gp, ring.parse("X"))
print("\nsigma(X)   =", sx)
print("sigma(X)^2 =", gp.sigma_product(sx, sx), "   <- the degree drops, the symbol dies")

# a surface where two degree-1 generators multiply into the subring
ctx = ("X", "Y", "T")
from gliderlab.ideals import Ideal

surf = QRP(ctx, Ideal.parse(ctx, ["X*Y - T"]))
fr2 = FilteredRing(surf, [surf.parse("T")], [surf.parse("X"), surf.parse("Y")])
gp2 = graded_presentation_bounded(fr2, 4)
print("\nsurface X*Y = T, graded relations:", gp2.relation_strings())
