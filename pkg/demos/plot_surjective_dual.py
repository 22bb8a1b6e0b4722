"""
Solving the dual equation
=========================

An injective operator on polynomials has a surjective transpose: every
moment table T is O*(L) for some L.  The solver builds L degree by degree and
hands back a kernel witness when injectivity fails.
"""

from hameldual import (ColumnFiniteOperator, NotInjective, Q, delta, dual_apply,
                       from_moments, injectivity_probe, solve_dual)
from hameldual.poly import poly_str

# d/dz + 1 sends z^n to z^n + n z^(n-1)
D1 = ColumnFiniteOperator(
    1, lambda b: {(b[0],): 1, **({(b[0] - 1,): b[0]} if b[0] else {})}, 0, Q, "d/dz + 1")
print(injectivity_probe(D1, 10))

L = solve_dual(D1, delta(1, 8), 8)
print("L:", *L.moments())
print("check:", *dual_apply(D1, L).moments())

# multiplication by z: the first moment of L is free and set to zero
Z = ColumnFiniteOperator(1, lambda b: {(b[0] + 1,): 1}, 1, Q, "z")
print("z:", *solve_dual(Z, from_moments([3, 1, 4, 1, 5]), 5).moments())

# d/dz kills constants, so no L exists in general
D = ColumnFiniteOperator(1, lambda b: {(b[0] - 1,): b[0]} if b[0] else {}, 0, Q, "d/dz")
try:
    solve_dual(D, delta(1, 4), 4)
except NotInjective as exc:
    print("no solution, kernel witness:", poly_str(exc.witness))
