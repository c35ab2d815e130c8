"""The torsion lattice, covers, sheaf axioms, and words of localizations.

The lattice of ideal-generated kernel functors is driven by a radical
calculus validated against a brute-force filter oracle; basis opens carry
localized sections that separate and glue within the degree bound.
"""

from gliderlab.filtered import FilteredModule, FilteredRing
from gliderlab.ideals import Ideal
from gliderlab.quotient import QuotientRingPresentation as QRP
from gliderlab.sheaves import (
    BasisOpen,
    SymKernelFunctor,
    Word,
    filter_leq_oracle,
    is_cover,
    kf_compare,
    schematic_check_weyl,
    serre_global_sections_check,
    sheaf_axiom_check,
    word_morphism_exists,
)
from gliderlab.weyl import WeylElement

ctx = ("X", "Y")
ring = QRP.free(ctx)
kx = SymKernelFunctor(Ideal.parse(ctx, ["X"]))
ko = SymKernelFunctor(Ideal.parse(ctx, ["X", "Y"]))
print("origin functor below line functor:", kf_compare(ko, kx, "leq"))
print("   (oracle agrees:", filter_leq_oracle(ko, kx), ")")
print("meet:", kf_compare(kx, SymKernelFunctor(Ideal.parse(ctx, ["Y"])), "meet"))

target = BasisOpen(Ideal.parse(ctx, ["X", "Y"]))
parts = [BasisOpen(Ideal.parse(ctx, ["X"])), BasisOpen(Ideal.parse(ctx, ["Y"]))]
print("\ntwo charts cover the punctured plane:", is_cover(target, parts))

fr = FilteredRing(ring, [], [ring.parse("X"), ring.parse("Y")])
for outcome in sheaf_axiom_check(FilteredModule(fr), parts):
    print(f"  {outcome.name}: {'ok' if outcome.ok else outcome.witness}")

print("\nword morphisms: (X) into (X,Y):",
      word_morphism_exists(Word(("X",)), Word(("X", "Y"))))

x, d = WeylElement.x(), WeylElement.d()
verdict = schematic_check_weyl([(x, d), (x**2, d**2)])
print("\noperator algebra schematic for (x, d) and (x^2, d^2):", verdict.ok)

for outcome in serre_global_sections_check(FilteredModule(fr),
                                           [ring.parse("X"), ring.parse("Y")]):
    print(f"  {outcome.name}: {'ok' if outcome.ok else outcome.witness}")
