#!/usr/bin/env python3
# Generator tuples span lattices inside the order; integer matrices act on
# the variables. Containment of lattices is exactly solvability of the
# transform equation, and the solver is constructive.

from quadgenus import (
    Discriminant,
    GenTuple,
    QuadInt,
    apply_transform,
    contains,
    hnf_basis,
    mat_mul,
    modules_equal,
    module_mul,
    solve_transform,
)

D = Discriminant(-23)
one = QuadInt.from_int(1, D)
w = QuadInt.omega(D)

order = GenTuple([one, w])  # the whole order as a 2-generator tuple
print(f"order tuple: {order}")
print(f"canonical basis: {hnf_basis(order)}")

# the ideal [2, (-1+sqrt(-23))/2] as a tuple (2, (1-sqrt(-23))/2)
xi = QuadInt(1, -1, D)
ideal = GenTuple([QuadInt.from_int(2, D), xi])
print(f"\nideal tuple: {ideal}")
print(f"canonical basis: {hnf_basis(ideal)}")
print(f"order contains ideal: {contains(order, ideal)}")
print(f"ideal contains order: {contains(ideal, order)}")

# the constructive transform: h with h(order tuple) = ideal tuple
h = solve_transform(order, ideal)
print(f"\nsolve_transform(order, ideal) = {h}")
print(f"apply_transform reproduces the ideal tuple: {apply_transform(h, order) == ideal}")

# standard-basis ideals always get the matrix [[a, (b-d)/2], [0, 1]]
a, b = 2, 1
print(f"expected [[a, (b-d)/2], [0, 1]] = [[{a}, {(b - D.d) // 2}], [0, 1]]")

# composing two substitutions is a matrix product
shear = ((2, 1), (0, 1))
both = mat_mul(h, shear)
print(f"\nh then {shear} = {both}")
print(f"same as acting twice: {apply_transform(both, order) == apply_transform(shear, apply_transform(h, order))}")

# redundant generators and permutations do not change the lattice
bigger = GenTuple([xi, QuadInt.from_int(2, D), xi * 3])
print(f"\nmodules_equal with a redundant generator: {modules_equal(ideal, bigger)}")

# lattice products: the ideal times its conjugate is 2 * order
conj = GenTuple([QuadInt.from_int(2, D), xi.conjugate()])
prod = module_mul(ideal, conj)
doubled = GenTuple([QuadInt.from_int(2, D), w * 2])
print(f"ideal * conjugate = 2 * order: {modules_equal(prod, doubled)}")
