"""The first Weyl algebra: normal forms, symbols, bounded membership.

Elements are kept in the x-before-d normal form; the two standard
filtrations (total degree, operator order) each give a commutative symbol.
"""

from gliderlab.weyl import (
    WeylElement,
    WeylLeftIdeal,
    gr_left_ideal_bounded,
    left_membership_bounded,
    weyl_symbol,
)

x, d = WeylElement.x(), WeylElement.d()

print("d*x       =", d * x)            # x*d + 1
print("d^2*x^2   =", (d * d) * (x * x))
print("[d, x^3]  =", d * x**3 - x**3 * d)

p = x * d + WeylElement.one()
print("\nsymbol of x*d + 1 (total):", weyl_symbol(p, "total"))
print("symbol of x*d + 1 (order):", weyl_symbol(p, "order"))

# 1 lies in the left ideal (x, d): the algebra is simple
w = left_membership_bounded(WeylElement.one(), WeylLeftIdeal([x, d]), bound=2)
print("\n1 in A1·x + A1·d:", w.member)
print("cofactors:", [str(c) for c in w.cofactors])

# the symbol ideal of the left ideal generated by x*d, order filtration
rep = gr_left_ideal_bounded(WeylLeftIdeal([x * d]), "order", 6)
print("\ngr(A1·(x*d)) up to degree 6:", [str(g) for g in rep.ideal.gens])
