"""Linear differential operators with polynomial coefficients.

A :class:`DiffOp` is stored in normal form, sum of c * x^g d^a with every
multiplication operator to the left of every derivative.  The Weyl
commutation d_j x_k = x_k d_j + [j == k] is applied in closed form,

    d^a x^g = sum over k <= a of C(a, k) g!/(g-k)! x^(g-k) d^(a-k),

so products and transposes land directly in normal form.
"""

from dataclasses import dataclass

from .duals import Functional, delta, derivative, poly_multiply
from .errors import MixedFields
from .finsupp import FinSuppVec, index_key
from .operators import ColumnFiniteOperator, injectivity_probe, solve_dual
from .poly import (coef_str, monomial, multi_binom, multi_falling, poly_diff,
                   poly_mul, sub_indices)
from .scalars import Q

__all__ = [
    "DiffOp", "transpose", "apply_poly", "as_operator_on_polys", "dual_action",
    "RegularityReport", "regularity_report", "fundamental_solution",
]


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _accumulate(out, key, c):
    new = out.get(key, 0) + c
    if new == 0:
        out.pop(key, None)
    else:
        out[key] = new


def _d_times_x(alpha, gamma):
    """Normal form of d^alpha x^gamma as {(gamma', alpha'): int}."""
    out = {}
    for k in sub_indices(alpha):
        w = multi_binom(alpha, k) * multi_falling(gamma, k)
        if w:
            out[(_sub(gamma, k), _sub(alpha, k))] = w
    return out


class DiffOp:
    """sum over terms of c * x^gamma * d^alpha, in normal form."""

    __slots__ = ("dims", "field", "_terms")

    def __init__(self, dims, terms=(), field=Q):
        if isinstance(terms, dict):
            terms = terms.items()
        clean = {}
        for (gamma, alpha), c in terms:
            gamma, alpha = tuple(gamma), tuple(alpha)
            if len(gamma) != dims or len(alpha) != dims:
                raise ValueError(f"term {gamma}, {alpha} does not have {dims} variables")
            _accumulate(clean, (gamma, alpha), field(c))
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("DiffOp is immutable")

    @classmethod
    def scalar(cls, c, dims, field=Q):
        zero = (0,) * dims
        return cls(dims, {(zero, zero): c}, field)

    @classmethod
    def x(cls, k, dims, field=Q):
        e = tuple(int(j == k - 1) for j in range(dims))
        return cls(dims, {(e, (0,) * dims): 1}, field)

    @classmethod
    def d(cls, k, dims, field=Q):
        e = tuple(int(j == k - 1) for j in range(dims))
        return cls(dims, {((0,) * dims, e): 1}, field)

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """Terms sorted by derivative multi-index, then coefficient monomial."""
        return sorted(self._terms.items(),
                      key=lambda kv: (index_key(kv[0][1]), index_key(kv[0][0])))

    @property
    def order(self):
        return max((sum(a) for _, a in self._terms), default=0)

    def symbols(self):
        """{alpha: c_alpha(x)} with c_alpha a polynomial."""
        out = {}
        for (gamma, alpha), c in self._terms.items():
            out.setdefault(alpha, {})[gamma] = c
        return {a: FinSuppVec(g, self.field) for a, g in out.items()}

    def is_constant_coefficient(self):
        return all(not any(g) for g, _ in self._terms)

    def over(self, field):
        return DiffOp(self.dims, self._terms, field)

    def _check(self, other):
        if self.field != other.field:
            raise MixedFields(f"{self.field} operator with {other.field} operator")
        if self.dims != other.dims:
            raise ValueError("operators in different numbers of variables")

    def __add__(self, other):
        if not isinstance(other, DiffOp):
            other = DiffOp.scalar(other, self.dims, self.field)
        self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            _accumulate(out, k, c)
        return DiffOp(self.dims, out, self.field)

    __radd__ = __add__

    def __neg__(self):
        return DiffOp(self.dims, {k: -c for k, c in self._terms.items()}, self.field)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def compose(self, other):
        """self o other, normal-ordered."""
        self._check(other)
        out = {}
        for (g1, a1), c1 in self._terms.items():
            for (g2, a2), c2 in other._terms.items():
                c = c1 * c2
                for (g, a), w in _d_times_x(a1, g2).items():
                    _accumulate(out, (_add(g1, g), _add(a, a2)), c * w)
        return DiffOp(self.dims, out, self.field)

    def __mul__(self, other):
        if isinstance(other, DiffOp):
            return self.compose(other)
        c = self.field(other)
        return DiffOp(self.dims, {k: c * v for k, v in self._terms.items()}, self.field)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n):
        result = DiffOp.scalar(1, self.dims, self.field)
        for _ in range(n):
            result = result.compose(self)
        return result

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return (self.dims == other.dims and self.field == other.field
                and self._terms == other._terms)

    def __hash__(self):
        return hash((self.dims, self.field, frozenset(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        """Text in the operator grammar; parsing it gives back this operator."""
        if not self._terms:
            return "0"
        parts = []
        for (gamma, alpha), c in self.items():
            factors = []
            for k, e in enumerate(gamma, 1):
                if e:
                    factors.append(f"x{k}" + (f"^{e}" if e > 1 else ""))
            for k, e in enumerate(alpha, 1):
                if e:
                    factors.append(f"d{k}" + (f"^{e}" if e > 1 else ""))
            cs = coef_str(c, self.field)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if not factors:
                body = cs
            elif cs == "1":
                body = "*".join(factors)
            else:
                body = "*".join([cs] + factors)
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"DiffOp({str(self)!r}, dims={self.dims}, {self.field})"

    @classmethod
    def parse(cls, text, dims=None, field=None):
        from .parser import parse
        return parse(text, dims, field)


def transpose(P):
    """The formal transpose: phi -> sum of (-1)^|a| d^a (c_a phi)."""
    out = {}
    for (gamma, alpha), c in P._terms.items():
        if sum(alpha) % 2:
            c = -c
        for key, w in _d_times_x(alpha, gamma).items():
            _accumulate(out, key, c * w)
    return DiffOp(P.dims, out, P.field)


def apply_poly(P, f):
    """Classical action of P on the polynomial f."""
    if f.field != P.field:
        raise MixedFields(f"{P.field} operator on a {f.field} polynomial")
    out = {}
    for (gamma, alpha), c in P._terms.items():
        df = poly_diff(f, alpha)
        for beta, a in df.as_dict().items():
            _accumulate(out, _add(beta, gamma), c * a)
    return FinSuppVec._raw(out, P.field)


def as_operator_on_polys(P):
    """P as a column-finite operator: column(b) = P(x^b)."""
    shift = max((sum(g) - sum(a) for g, a in P._terms), default=0)

    def column(beta):
        return apply_poly(P, monomial(beta, P.field))
    return ColumnFiniteOperator(P.dims, column, shift, P.field, str(P))


def dual_action(P_star, T):
    """P* T = sum of c_alpha * (d^alpha T), built from the module operations."""
    if P_star.field != T.field:
        raise MixedFields(f"{P_star.field} operator on a {T.field} functional")
    result = Functional(T.dims, T.horizon, {}, T.field)
    for alpha, c in sorted(P_star.symbols().items(), key=lambda kv: index_key(kv[0])):
        result = result + poly_multiply(c, derivative(alpha, T))
    return result


@dataclass(frozen=True)
class RegularityReport:
    """Two layers: ``probe`` is computed and verified; ``flags`` are syntactic."""

    operator: DiffOp
    transpose: DiffOp
    probe: object
    flags: tuple

    def summary(self):
        lines = [f"operator   {self.operator}",
                 f"transpose  {self.transpose}",
                 f"probe      {self.probe}",
                 f"flags      {', '.join(self.flags) or 'none'}"]
        return "\n".join(lines)


def regularity_report(P_star, N):
    Pt = transpose(P_star)
    probe = injectivity_probe(as_operator_on_polys(Pt), N)
    flags = []
    if P_star and P_star.is_constant_coefficient():
        flags.append("ConstantCoefficientsNonzero")
    if P_star and Pt == -P_star:
        flags.append("SelfTransposeNegation")
    return RegularityReport(P_star, Pt, probe, tuple(flags))


def fundamental_solution(P_star, N):
    """F with P* F = delta, solved on the polynomial model up to degree N."""
    O = as_operator_on_polys(transpose(P_star))
    F = solve_dual(O, delta(P_star.dims, N, P_star.field), N)
    return Functional(F.dims, F.horizon, F.as_dict(), F.field,
                      f"fundamental solution of {P_star}")
