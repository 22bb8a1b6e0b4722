"""
Free sets, bases and complements
================================

Finite-support vectors over exact fields, and the basis tools built on them.
"""

from hameldual import FinSuppVec, Q
from hameldual.basis import complement, extend_to_basis, is_free, rank

# vectors are finite maps from indices to scalars
u = FinSuppVec({"a": 1, "b": 1})
v = FinSuppVec({"a": 2, "b": 2})
w = FinSuppVec({"b": 1, "c": -1})

cert = is_free([u, v, w])
print("u, v, w:", cert.verdict)
print("dependency coefficients:", *cert.witness_vector(3, Q))
print("rank:", rank([u, v, w]))

# extend {u} to a basis of the span of the coordinate vectors
ambient = [FinSuppVec({s: 1}) for s in "abc"]
print("extension:", extend_to_basis([u], ambient))

# a complement of span{u, w} inside the same space
print("complement:", complement([u, w], ambient))
