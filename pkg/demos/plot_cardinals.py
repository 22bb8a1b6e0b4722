"""
Dimensions of dual spaces
=========================

Cardinal arithmetic under GCH, applied to a few classical spaces.
"""

from hameldual.cardinals import ALEPH0, C, card_pow, dim_of_dual, example_table

print("2^aleph0 =", card_pow(ALEPH0, ALEPH0))
print("dim of the dual of a space of dimension c:", dim_of_dual(C, C))

for row in example_table():
    print(row)
