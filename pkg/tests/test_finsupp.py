from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hameldual import (GF, QI, FinSuppVec, GaussianRational, MixedFields, NotFree,
                       NotInSpan, Q, basis_vector, coordinate_iso, expand,
                       inner_product, linear_combine, spectrum, zero_vector)

from strategies import atom_vectors, gaussian_vectors, rational


def test_basis_vector_tuple_index():
    e = basis_vector((2,), Q)
    assert e.as_dict() == {(2,): 1}


def test_basis_vector_is_kronecker():
    e = basis_vector("s")
    assert e["s"] == 1
    assert e["t"] == 0
    assert spectrum(e) == ["s"]


def test_basis_vector_gf5():
    e = basis_vector("a", GF(5))
    assert e["a"] == GF(5)(1)
    assert e["a"].p == 5


def test_linear_combine_examples():
    ea = basis_vector("a")
    assert linear_combine([(2, ea), (3, ea)]).as_dict() == {"a": 5}
    assert linear_combine([(1, ea), (-1, ea)]).is_zero()
    e2 = basis_vector("a", GF(2))
    assert linear_combine([(1, e2), (1, e2)]).is_zero()


def test_linear_combine_mixed_fields():
    with pytest.raises(MixedFields):
        linear_combine([(1, basis_vector("a")), (1, basis_vector("a", GF(3)))])


def test_spectrum_examples():
    v = linear_combine([(3, basis_vector("a")), (-2, basis_vector("c"))])
    assert spectrum(v) == ["a", "c"]
    assert spectrum(zero_vector()) == []
    w = basis_vector((1, 0)) + basis_vector((0, 2))
    assert spectrum(w) == [(1, 0), (0, 2)]


def test_index_order_within_degree():
    v = FinSuppVec({(0, 2): 1, (1, 1): 1, (2, 0): 1, (0, 1): 1, (1, 0): 1, "z": 1})
    assert spectrum(v) == ["z", (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]


def test_no_stored_zeros():
    v = FinSuppVec({"a": 0, "b": 1, "c": Fraction(0)})
    assert v.as_dict() == {"b": 1}


def test_coordinate_iso_example():
    e1, e2 = basis_vector("e1"), basis_vector("e2")
    # independent check: e1 = 1*(e1+e2) + (-1)*e2
    f = coordinate_iso(e1, [("a", e1 + e2), ("b", e2)])
    assert f.as_dict() == {"a": 1, "b": -1}


def test_coordinate_iso_of_basis_member():
    vs = [("s", basis_vector("x") + basis_vector("y")), ("t", basis_vector("y"))]
    assert coordinate_iso(vs[0][1], vs).as_dict() == {"s": 1}


def test_coordinate_iso_not_in_span():
    with pytest.raises(NotInSpan) as info:
        coordinate_iso(basis_vector("e2"), [("a", basis_vector("e1"))])
    assert info.value.residual == basis_vector("e2")


def test_coordinate_iso_dependent_basis():
    e = basis_vector("p")
    with pytest.raises(NotFree) as info:
        coordinate_iso(e, [("a", e), ("b", e * 2)])
    assert info.value.witness.as_dict() == {"b": 1, "a": -2}


def test_inner_product_examples():
    assert inner_product(basis_vector("r"), basis_vector("s")) == 0
    assert inner_product(basis_vector("r"), basis_vector("r")) == 1
    v = basis_vector("e1") * 2 + basis_vector("e2") * 3
    assert inner_product(v, basis_vector("e2")) == 3
    iv = FinSuppVec({"e1": GaussianRational(0, 1)}, QI)
    assert inner_product(iv, basis_vector("e1", QI)) == GaussianRational(0, -1)


@given(atom_vectors())
def test_canonical_form(v):
    assert all(c != 0 for c in v.as_dict().values())
    assert linear_combine([(1, v), (0, v)]) == v


@st.composite
def free_family(draw):
    # triangular in the atom order, hence free
    atoms = list("abcde")
    n = draw(st.integers(1, 5))
    fam = []
    for k in range(n):
        entries = {atoms[k]: draw(rational.filter(bool))}
        for j in range(k + 1, 5):
            entries[atoms[j]] = draw(rational)
        fam.append((f"v{k}", FinSuppVec(entries)))
    return fam


@given(free_family(), st.data())
def test_coordinate_roundtrip_and_uniqueness(fam, data):
    coeffs = data.draw(st.lists(rational, min_size=len(fam), max_size=len(fam)))
    v = linear_combine([(c, b) for c, (_, b) in zip(coeffs, fam)])
    f = coordinate_iso(v, fam)
    assert expand(f, fam) == v
    assert all(f[label] == c for c, (label, _) in zip(coeffs, fam))
    perm = data.draw(st.permutations(fam))
    assert coordinate_iso(v, perm) == f


@given(gaussian_vectors(), gaussian_vectors())
def test_inner_product_conjugate_symmetry(v, w):
    assert inner_product(v, w) == QI.conj(inner_product(w, v))


@given(atom_vectors())
def test_inner_product_positive(v):
    if v:
        assert inner_product(v, v) > 0


@given(atom_vectors(), atom_vectors(), atom_vectors(), rational, rational)
def test_inner_product_linear_second_slot(u, v, w, a, b):
    lhs = inner_product(u, linear_combine([(a, v), (b, w)]))
    assert lhs == a * inner_product(u, v) + b * inner_product(u, w)
