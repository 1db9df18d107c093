#!/usr/bin/env python3
# Quadratic integers stored as (p + q*sqrt(d))/2.
#
# The parity rule p = q*d (mod 2) picks out exactly the order of
# discriminant d, so every sum, product and conjugate stays representable
# and every norm and trace is an ordinary integer.

from quadgenus import Discriminant, QuadInt

D = Discriminant(-23)
print(f"discriminant d = {D.d}, conductor {D.conductor}, fundamental part {D.fundamental}")

one = QuadInt.from_int(1, D)
w = QuadInt.omega(D)  # (d - sqrt(d))/2, the second basis element of the order
print(f"omega = {w}")
print(f"norm(omega) = {w.norm()}   (this is (d^2 - d)/4 = {(D.d**2 - D.d) // 4})")
print(f"trace(omega) = {w.trace()}")

# omega satisfies x^2 = d*x - (d^2 - d)/4; check it exactly
lhs = w * w
rhs = w * D.d - QuadInt.from_int((D.d**2 - D.d) // 4, D)
print(f"omega^2 = {lhs}, d*omega - (d^2-d)/4 = {rhs}, equal: {lhs == rhs}")

# norms are multiplicative, traces additive
x = QuadInt(1, -1, D)  # (1 - sqrt(-23))/2
y = QuadInt(3, 1, D)   # (3 + sqrt(-23))/2
print(f"\nx = {x}, y = {y}")
print(f"norm(x) = {x.norm()}, norm(y) = {y.norm()}, norm(x*y) = {(x * y).norm()}")
print(f"x * conj(x) = {x * x.conjugate()}  (the norm, embedded)")

# coordinates over the basis (1, omega) are what the lattice layer uses
u, v = x.coords()
print(f"\nx in coordinates over (1, omega): ({u}, {v})")
print(f"rebuilt: {QuadInt.from_coords(u, v, D)} == x: {QuadInt.from_coords(u, v, D) == x}")

# conductor splits for a few non-maximal orders
print("\nd = f^2 * dK for some non-fundamental discriminants:")
for dv in (-12, -27, -48, -63, -99, -147):
    disc = Discriminant(dv)
    print(f"  d = {dv:5d}  ->  f = {disc.conductor}, dK = {disc.fundamental}")
