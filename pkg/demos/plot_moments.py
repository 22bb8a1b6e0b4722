"""
Functionals as moment tables
============================

A linear functional on polynomials is determined by its moments.  Here the
moments come from point masses, from piecewise polynomials, and from a
sequence of boxes that shrinks to a point.
"""

from fractions import Fraction

from hameldual import delta, from_moments
from hameldual.duals import (box_family, derivative, schwartz_moments, translate,
                             weak_limit)

# delta at the origin: only the zeroth moment survives
print("delta:", *delta(1, 5).moments())

# its derivative pairs f with -f'(0)
print("d delta:", *derivative((1,), delta(1, 5)).moments())

# moving a functional to the right by 2
T = from_moments([1, 0, 1, 0, 0, 0])
print("translated:", *translate((2,), T).moments())

# the hat function on [-1, 1], described piece by piece
hat = schwartz_moments([(-1, 0, [1, 1]), (0, 1, [1, -1])], 6)
print("hat:", *hat.moments())

# boxes of width 1/n and height n converge weakly to delta
fam = box_family()
for n in (1, 10, 1000):
    print(f"box n={n}:", *(fam.value((k,), n) for k in range(4)))
print("limit:", *weak_limit(fam, 6).moments())

# the same boxes as piecewise polynomials
box3 = schwartz_moments([(0, Fraction(1, 3), [3])], 3)
print("box n=3 directly:", *box3.moments())
