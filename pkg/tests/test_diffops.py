from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from hameldual import (FinSuppVec, Functional, MixedFields, NotInjective,
                       OperatorSyntaxError, Q, QI, UnknownVariable, delta, dual_apply,
                       eval_bracket, from_moments, parse)
from hameldual.diffops import (DiffOp, apply_poly, as_operator_on_polys, dual_action,
                               fundamental_solution, regularity_report, transpose)
from hameldual.duals import derivative
from hameldual.poly import monomial, poly_diff, poly_mul
from hameldual.scalars import GaussianRational

from strategies import constant_coefficient_ops, diffops, functionals, polynomials

I = GaussianRational(0, 1)
LEWY = "d1 + i*d2 - 2*i*(x1 + i*x2)*d3"


def poly(*coeffs):
    return FinSuppVec({(n,): c for n, c in enumerate(coeffs)})


# parsing

def test_parse_examples():
    assert parse("d1 + 1").terms == {((0,), (1,)): 1, ((0,), (0,)): 1}
    rot = parse("x1*d2 - x2*d1")
    assert rot.terms == {((1, 0), (0, 1)): 1, ((0, 1), (1, 0)): -1}
    assert parse("d1*x1") == parse("x1*d1 + 1")


def test_parse_variants():
    assert parse("x*dx") == parse("x1*d1")
    assert parse("d") == parse("d1")
    assert parse("y*dz").dims == 3
    assert parse("d2", dims=4).dims == 4
    assert parse("(d1 + 1)^2") == parse("d1*d1 + 2*d1 + 1")
    assert parse("-1/2*x1").terms == {((1,), (0,)): Fraction(-1, 2)}
    assert parse("2*i").field == QI


@pytest.mark.parametrize("text, pos", [("d1 +", 4), ("x1 ** 2", 4), ("3 $ x", 2),
                                       ("(d1", 3), ("d1 d2", 3)])
def test_parse_syntax_errors(text, pos):
    with pytest.raises(OperatorSyntaxError) as info:
        parse(text)
    assert info.value.position == pos


def test_parse_unknown_variable():
    with pytest.raises(UnknownVariable):
        parse("x0*d1")
    with pytest.raises(UnknownVariable):
        parse("d3", dims=2)


def test_parse_field_mismatch():
    with pytest.raises(MixedFields):
        parse("i*d1", field=Q)


def test_weyl_relation():
    assert parse("d1*x1") - parse("x1*d1") == DiffOp.scalar(1, 1)


@given(diffops(dims=2))
def test_str_parse_roundtrip(P):
    assert parse(str(P), dims=P.dims, field=P.field) == P


# transpose

def test_transpose_examples():
    assert transpose(parse("3*d1^2 - d1 + 5")) == parse("3*d1^2 + d1 + 5")
    L = parse(LEWY)
    assert transpose(L) == -L
    rot = parse("x1*d2 - x2*d1")
    assert transpose(rot) == -rot
    assert transpose(parse("x*d")) == parse("-x*d - 1")


@given(constant_coefficient_ops(dims=2))
def test_transpose_constant_coefficients(P):
    expected = {(g, a): (-c if sum(a) % 2 else c) for (g, a), c in P.terms.items()}
    assert transpose(P).terms == expected


@settings(deadline=None)
@given(st.integers(1, 3).flatmap(lambda d: diffops(dims=d)))
def test_transpose_involution(P):
    assert transpose(transpose(P)) == P


@settings(deadline=None, max_examples=50)
@given(st.integers(1, 3).flatmap(lambda d: st.tuples(diffops(dims=d), st.lists(polynomials(d, 4), min_size=20, max_size=20))))
def test_transpose_leibniz_oracle(case):
    P, phis = case
    Pt = transpose(P)
    for phi in phis:
        expected = FinSuppVec(field=P.field)
        for (gamma, alpha), c in P.terms.items():
            term = poly_diff(poly_mul(monomial(gamma).scale(c), phi), alpha)
            expected = expected + (term.scale(-1) if sum(alpha) % 2 else term)
        assert apply_poly(Pt, phi) == expected


# action on polynomials

def test_apply_poly_examples():
    assert apply_poly(parse("d1"), poly(0, 0, 1)) == poly(0, 2)
    xd = parse("x*d")
    for n in range(6):
        assert apply_poly(xd, monomial((n,))) == monomial((n,)).scale(n)
    L = parse(LEWY)
    f = monomial((1, 0, 1), QI)
    # x3 - 2i(x1 + i x2) x1 = x3 - 2i x1^2 + 2 x1 x2
    expected = FinSuppVec({(0, 0, 1): 1, (2, 0, 0): -2 * I, (1, 1, 0): 2}, QI)
    assert apply_poly(L, f) == expected


def test_bridge_columns():
    D = as_operator_on_polys(parse("d1"))
    assert D.shift == -1
    assert D.column((4,)) == monomial((3,)).scale(4)
    assert D.column((0,)).is_zero()
    X = as_operator_on_polys(parse("x1", dims=2))
    assert X.shift == 1
    assert X.column((2, 3)) == monomial((3, 3))
    E = as_operator_on_polys(parse("d1 + 1"))
    assert E.shift == 0
    assert E.column((5,)) == poly(0, 0, 0, 0, 5, 1)


# dual action

def test_dual_action_examples():
    T = from_moments([2, 7, 1, 8, 2, 8])
    assert dual_action(parse("1"), T) == T
    assert dual_action(parse("d"), delta(1, 5)).moments() == [0, -1, 0, 0, 0, 0]


@settings(deadline=None, max_examples=50)
@given(functionals(1, 10))
def test_dual_action_routes_agree_for_x_d(T):
    P = parse("x*d")
    bridged = dual_apply(as_operator_on_polys(transpose(P)), T)
    direct = dual_action(P, T)
    top = min(direct.horizon, bridged.horizon)
    assert top >= 9
    assert direct.restrict(top) == bridged.restrict(top)


@settings(deadline=None, max_examples=60)
@given(st.integers(1, 2).flatmap(lambda d: st.tuples(
    diffops(dims=d, order=2, coeff_degree=2, max_terms=4), polynomials(d, 5), functionals(d, 10))))
def test_transpose_adjointness(case):
    P, phi, T = case
    assert eval_bracket(dual_action(P, T), phi) == eval_bracket(T, apply_poly(transpose(P), phi))


# regularity and fundamental solutions

def test_regularity_laplacian():
    rep = regularity_report(parse("d1^2 + d2^2"), 3)
    assert rep.flags == ("ConstantCoefficientsNonzero",)
    assert rep.probe.verdict == "KernelWitness"
    assert rep.probe.witness == monomial((1, 0))
    assert "ConstantCoefficientsNonzero" in rep.summary()


def test_regularity_rotation_and_lewy():
    rep = regularity_report(parse("x1*d2 - x2*d1"), 3)
    assert "SelfTransposeNegation" in rep.flags
    assert rep.probe.witness == FinSuppVec({(2, 0): 1, (0, 2): 1})
    rep = regularity_report(parse(LEWY), 2)
    assert rep.flags == ("SelfTransposeNegation",)


def test_regularity_d_plus_one():
    rep = regularity_report(parse("d + 1"), 12)
    assert rep.probe.verdict == "InjectiveUpTo" and rep.probe.N == 12
    assert rep.flags == ("ConstantCoefficientsNonzero",)


def test_fundamental_solution_d_plus_one():
    F = fundamental_solution(parse("d + 1"), 10)
    # recurrence m_n = n m_{n-1} from <F, -phi' + phi> = phi(0)
    m = [1]
    for n in range(1, 11):
        m.append(n * m[-1])
    assert F.moments() == m == [factorial(n) for n in range(11)]


def test_fundamental_solution_matches_gamma_integral():
    # classical solution exp(-x) H(x): n-th moment is Gamma(n+1), checked by quadrature
    import math
    F = fundamental_solution(parse("d + 1"), 6)
    for n in range(7):
        h = 1e-3
        xs = [h * (k + 0.5) for k in range(60000)]
        quad = sum(x ** n * math.exp(-x) for x in xs) * h
        assert abs(quad - float(F[(n,)])) < 1e-3 * max(1, quad)


def test_fundamental_solution_trivial_and_failure():
    assert fundamental_solution(parse("1"), 5) == delta(1, 5)
    with pytest.raises(NotInjective) as info:
        fundamental_solution(parse("d"), 5)
    assert info.value.witness == monomial((0,))


@settings(deadline=None, max_examples=30)
@given(st.integers(1, 2).flatmap(lambda d: diffops(dims=d, order=2, coeff_degree=1, max_terms=4)))
def test_fundamental_solution_verifies(P):
    N = 6
    try:
        F = fundamental_solution(P, N)
    except NotInjective:
        return
    lhs = dual_action(P, F)
    # only the coefficient degree costs horizon; derivatives do not
    coeff_deg = max((sum(g) for g, _ in P.terms), default=0)
    assert lhs.horizon == N - coeff_deg
    assert lhs == delta(P.dims, N).restrict(lhs.horizon)
