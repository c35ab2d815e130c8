"""Descending chains, their axioms, and what localization does to them.

A chain that intersects to zero can grow a "body" after localizing: the
localized degree of some elements drops below every tested level.  The
divergence marker makes that phenomenon visible at a finite bound.
"""

from gliderlab.filtered import FilteredRing
from gliderlab.gliders import Chain, body, build_glider, check_fragment_axioms
from gliderlab.localization import MultiplicativeSet, glider_localize
from gliderlab.quotient import QuotientRingPresentation as QRP

ring = QRP.free(("X",))
fr = FilteredRing(ring, [ring.parse("X^2"), ring.parse("X^3")], [ring.parse("X")])

levels = [[ring.one()], [ring.parse("X^2"), ring.parse("X^4"), ring.parse("X^5")]]
for n in range(2, 11):
    levels.append([ring.parse(f"X^{n + 3}"), ring.parse(f"X^{n + 4}")])
glider = build_glider(fr, Chain(levels, tail="zero"))

rep = check_fragment_axioms(glider)
print("descending:", rep.descending, "| axioms:", rep.axioms_ok, "| standard:", rep.standard)

pre = body(glider)
print("body before localizing: stabilized =", pre.stabilized, ", rows =", len(pre.rows))

loc = glider_localize(glider, MultiplicativeSet(fr, ring.parse("X")))
print("\nafter localizing at X:")
print("  diverging elements:", loc.body_elements[:5], "...")
d = loc.degrees["X^4"]
print("  witnessed degrees of X^4:", [v for _, v in d.witnesses])
print("  below every tested level:", d.below_bound)
print("  graded fragment torsion:", loc.torsion.status, "witness:", loc.torsion.witness)
