"""Exact polynomial arithmetic and ideal calculus.

Everything is computed over the rationals with no floating point anywhere:
coefficients are fractions, monomial orders are explicit, and Groebner
bases come out reduced and deterministic.
"""

from gliderlab.ideals import Ideal, ideal_combine, radical_membership
from gliderlab.poly import Polynomial

ctx = ("x", "y")

f = Polynomial.parse(ctx, "x^2 + y^2 - 1")
g = Polynomial.parse(ctx, "x*y - 1")
print("f          =", f)
print("g          =", g)
print("f*g        =", f * g)
print("f^2 - g    =", f * f - g)

# the reduced Groebner basis of the circle/hyperbola intersection
I = Ideal(ctx, [f, g])
print("\nreduced basis of (f, g):")
for b in I.groebner():
    print("   ", b)

# ideal operations: intersection and colon recover divisibility structure
X = Ideal.parse(ctx, ["x"])
Y = Ideal.parse(ctx, ["y"])
meet = ideal_combine(X, Y, "intersection")
print("\n(x) ∩ (y) =", [str(b) for b in meet.groebner()])

# radical membership via the auxiliary-variable trick
J = Ideal.parse(ctx, ["x^2", "y^3"])
print("x + y in sqrt(x^2, y^3)?", radical_membership(J, Polynomial.parse(ctx, "x + y")))
print("x + 1 in sqrt(x^2, y^3)?", radical_membership(J, Polynomial.parse(ctx, "x + 1")))
