"""Characteristic varieties and the smoothness detector.

For the cyclic module A1/(x*d) the annihilator of the graded module is the
symbol ideal (x*xi); the point (x) lies in the characteristic variety but
is excluded from the strong variety by a concrete witness: xi kills the
class of x.  The same witness machinery detects singular subring towers.
"""

from gliderlab.charvariety import (
    WeylCyclicModule,
    char_variety,
    smoothness_glider,
    strong_char_excludes,
)
from gliderlab.ideals import Ideal
from gliderlab.quotient import QuotientRingPresentation as QRP
from gliderlab.weyl import SYMBOL_CTX, WeylElement, WeylLeftIdeal

gm = WeylCyclicModule(WeylLeftIdeal([WeylElement.x() * WeylElement.d()]), "order")
primes = [Ideal.parse(SYMBOL_CTX, ["x"]), Ideal.parse(SYMBOL_CTX, ["x - 1"])]
rep = char_variety(gm, primes)
print("annihilator of the graded module:", [str(g) for g in rep.annihilator.gens])
for datum, verdict in rep.verdicts:
    print(f"  {datum}: {verdict}")

v = strong_char_excludes(gm, Ideal.parse(SYMBOL_CTX, ["x"]), 2)
print("\nstrong variety at (x):", v.status, "witness:", v.witness)

# the smoothness detector: a zero-constant factorization of a degenerate
# generator produces a glider whose strong variety is provably proper
ring = QRP.free(("T",))
built = smoothness_glider(ring, [ring.parse("T^2"), ring.parse("T^3")],
                          ring.parse("T^2"), ring.parse("T"), ring.parse("T"))
print("\ncusp tower:", built.exclusion.status, "witness:", built.exclusion.witness)

ring2 = QRP.free(("T", "Y"))
try:
    smoothness_glider(ring2, [ring2.parse("T")], ring2.parse("Y"),
                      ring2.parse("Y"), ring2.one())
except ValueError as exc:
    print("smooth tower rejected:", exc)
