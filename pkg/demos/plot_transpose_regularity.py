"""
Transposes and regularity
=========================

Differential operators with polynomial coefficients, their formal transposes,
and a probe for injectivity on polynomials.
"""

from hameldual import parse
from hameldual.diffops import apply_poly, regularity_report, transpose
from hameldual.poly import monomial, poly_str

# normal ordering puts every x to the left of every d
print("d1*x1 =", parse("d1*x1"))

lewy = parse("d1 + i*d2 - 2*i*(x1 + i*x2)*d3")
print("Lewy:", lewy)
print("transpose:", transpose(lewy))
print("applied to x1*x3:", poly_str(apply_poly(lewy, monomial((1, 0, 1), lewy.field))))

for text in ("x1*d2 - x2*d1", "d1^2 + d2^2", "d + 1"):
    print()
    print(regularity_report(parse(text), 4).summary())
