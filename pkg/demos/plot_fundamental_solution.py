"""
Fundamental solutions and convolution
=====================================

Moments of F with P*F = delta, and how F convolves with point distributions.
"""

import math

from hameldual import NotInjective, parse
from hameldual.diffops import dual_action, fundamental_solution
from hameldual.poly import poly_str
from hameldual.pointdist import PointDistribution, convolve

P = parse("d + 1")
F = fundamental_solution(P, 10)
print("moments:", *F.moments())

# the classical solution exp(-x) on x > 0 has the same moments
print("Gamma(n+1):", [round(math.gamma(n + 1)) for n in range(11)])
print("P*F:", *dual_action(P, F).moments())

# F convolved with delta_1 is F moved to the right
moved = convolve(F, PointDistribution.delta((1,)))
print("F * delta_1:", *moved.moments()[:6])

# the constant-coefficient operator d has no solution in this model
try:
    fundamental_solution(parse("d"), 6)
except NotInjective as exc:
    print(type(exc).__name__, "with kernel witness", poly_str(exc.witness))
