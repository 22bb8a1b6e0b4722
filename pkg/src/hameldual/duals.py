"""Algebraic-dual functionals on monomial bases.

A :class:`Functional` is known through its values on basis vectors: for the
polynomial space these are the moments ``m_b = <T, x^b>``.  Only finitely
many values can be stored, so every functional carries a *horizon* N: all
multi-degrees of total degree <= N have a definite value (absent means zero)
and asking for anything beyond raises :class:`HorizonExceeded`.  A horizon of
``None`` means the table is complete, i.e. every unlisted value is zero (the
restricted dual).

Horizon bookkeeping is explicit: differentiation keeps the horizon,
multiplication by a degree-k polynomial lowers it by k, and nothing is ever
truncated silently.
"""

from fractions import Fraction
from math import comb, lcm

from ._echelon import Echelon
from .errors import DecompositionFailed, Divergent, HorizonExceeded, MixedFields
from .finsupp import FinSuppVec, _common_field, index_degree, index_key
from .poly import (multi_binom, multi_falling, multidegrees, poly_degree,
                   sub_indices)
from .scalars import Q

__all__ = [
    "Functional", "delta", "indicator", "from_moments", "eval_bracket",
    "restricted_dual_embed", "double_dual_embed", "embed_dual_via_complement",
    "derivative", "poly_multiply", "inflect", "translate", "schwartz_moments",
    "ParametricMomentFamily", "box_family", "weak_limit",
]


def _min_horizon(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class Functional:
    """A linear functional given by its values on basis indices up to a horizon."""

    __slots__ = ("dims", "horizon", "field", "_table", "provenance")

    def __init__(self, dims, horizon, table=(), field=Q, provenance=""):
        if horizon is not None and horizon < 0:
            raise HorizonExceeded(0, horizon)
        if isinstance(table, dict):
            table = table.items()
        clean = {}
        for beta, c in table:
            if isinstance(beta, list):
                beta = tuple(beta)
            if isinstance(beta, tuple) and len(beta) != dims:
                raise ValueError(f"multi-degree {beta} does not have {dims} entries")
            if horizon is not None and index_degree(beta) > horizon:
                raise ValueError(f"value at {beta} lies beyond horizon {horizon}")
            c = field(c)
            if c != 0:
                clean[beta] = c
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "horizon", horizon)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_table", clean)
        object.__setattr__(self, "provenance", provenance)

    def __setattr__(self, name, value):
        raise AttributeError("Functional is immutable")

    def __getitem__(self, beta):
        if isinstance(beta, list):
            beta = tuple(beta)
        deg = index_degree(beta)
        if self.horizon is not None and deg > self.horizon:
            raise HorizonExceeded(deg, self.horizon)
        return self._table.get(beta, self.field.zero)

    def items(self):
        return sorted(self._table.items(), key=lambda kv: index_key(kv[0]))

    def as_dict(self):
        return dict(self._table)

    def moments(self):
        """All values up to the horizon, in index order (finite horizon only)."""
        if self.horizon is None:
            raise ValueError("moments() needs a finite horizon")
        return [self[b] for b in multidegrees(self.dims, self.horizon)]

    def restrict(self, horizon):
        """The same functional with a smaller horizon."""
        if self.horizon is not None and horizon > self.horizon:
            raise HorizonExceeded(horizon, self.horizon)
        table = {b: c for b, c in self._table.items() if index_degree(b) <= horizon}
        return Functional(self.dims, horizon, table, self.field, self.provenance)

    def over(self, field):
        return Functional(self.dims, self.horizon, self._table, field, self.provenance)

    def _check(self, other):
        if self.field != other.field:
            raise MixedFields(f"{self.field} functional with {other.field} functional")
        if self.dims != other.dims:
            raise ValueError("functionals on different numbers of variables")

    def __add__(self, other):
        if not isinstance(other, Functional):
            return NotImplemented
        self._check(other)
        horizon = _min_horizon(self.horizon, other.horizon)
        out = {}
        for src in (self._table, other._table):
            for b, c in src.items():
                if horizon is None or index_degree(b) <= horizon:
                    out[b] = out.get(b, 0) + c
        return Functional(self.dims, horizon, out, self.field)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if not isinstance(other, Functional):
            return NotImplemented
        return self + (-other)

    def scale(self, a):
        a = self.field(a)
        return Functional(self.dims, self.horizon,
                          {b: a * c for b, c in self._table.items()}, self.field)

    def __mul__(self, a):
        if isinstance(a, Functional):
            return NotImplemented
        return self.scale(a)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Functional):
            return NotImplemented
        return (self.dims == other.dims and self.horizon == other.horizon
                and self.field == other.field and self._table == other._table)

    def __hash__(self):
        return hash((self.dims, self.horizon, self.field,
                     frozenset(self._table.items())))

    def __repr__(self):
        inner = ", ".join(f"{b}: {self.field.format(c)}" for b, c in self.items()[:8])
        more = ", ..." if len(self._table) > 8 else ""
        return f"Functional(dims={self.dims}, horizon={self.horizon}, {{{inner}{more}}})"


def delta(dims, horizon=None, field=Q):
    """The Dirac functional at the origin: moments (1, 0, 0, ...)."""
    return Functional(dims, horizon, {(0,) * dims: 1}, field, "delta")


def indicator(beta, horizon=None, field=Q):
    """Phi_beta, dual to the basis vector e_beta."""
    beta = tuple(beta) if not isinstance(beta, str) else beta
    dims = None if isinstance(beta, str) else len(beta)
    return Functional(dims, horizon, {beta: 1}, field, f"indicator {beta}")


def from_moments(values, field=Q):
    """One-variable functional from its moment list m_0 ... m_N."""
    values = list(values)
    return Functional(1, len(values) - 1,
                      {(n,): v for n, v in enumerate(values)}, field)


def eval_bracket(T, v):
    """<T, v> = sum of v(s) * T(s)."""
    if T.field != v.field:
        raise MixedFields(f"{T.field} functional against {v.field} vector")
    acc = T.field.zero
    for s, c in v.items():
        acc = acc + c * T[s]
    return acc


def _dims_of(v, dims):
    if dims is not None:
        return dims
    for s in v.as_dict():
        return None if isinstance(s, str) else len(s)
    return None


def restricted_dual_embed(v, dims=None):
    """sigma(sum c_s e_s) = sum c_s Phi_s, a functional with zero tail."""
    return Functional(_dims_of(v, dims), None, v.as_dict(), v.field, "restricted dual")


def double_dual_embed(v):
    """iota(v): the evaluation T -> <T, v> on the dual."""
    def evaluate(T):
        return eval_bracket(T, v)
    evaluate.vector = v
    return evaluate


def embed_dual_via_complement(T_on_U, U_basis, W_basis, dims=None):
    """Extend a functional from span(U) to U (+) W, vanishing on W.

    ``T_on_U`` gives the value of T on each vector of ``U_basis`` (a list
    aligned with it, or a :class:`Functional` read at ``0, 1, ...`` is not
    accepted: pass plain values).  The result is a functional on the
    coordinates of the ambient space, with value zero on every coordinate
    outside the ambient span.
    """
    U_basis, W_basis = list(U_basis), list(W_basis)
    values = list(T_on_U)
    if len(values) != len(U_basis):
        raise ValueError("one value per vector of U_basis is needed")
    field = _common_field(U_basis + W_basis)
    ech = Echelon(field, index_key)
    given = {}
    for i, u in enumerate(U_basis):
        if ech.insert(u.as_dict(), ("U", i)) is not None:
            raise DecompositionFailed("U_basis is not free")
        given[("U", i)] = field(values[i])
    for j, w in enumerate(W_basis):
        if ech.insert(w.as_dict(), ("W", j)) is not None:
            raise DecompositionFailed("U_basis and W_basis together are not free")
        given[("W", j)] = field.zero
    indices = set()
    for v in U_basis + W_basis:
        indices.update(v.as_dict())
    if len(ech) != len(indices):
        raise DecompositionFailed("U and W do not span the ambient coordinates")
    table = ech.solve_functional(given)
    some = next(iter(indices), None)
    if dims is None and isinstance(some, tuple):
        dims = len(some)
    return Functional(dims, None, table, field, "extension by zero on W")


def derivative(alpha, T):
    """<d^a T, x^b> = (-1)^|a| <T, d^a x^b>; the horizon is unchanged."""
    alpha = tuple(alpha)
    if len(alpha) != T.dims:
        raise ValueError("multi-index length differs from dims")
    sign = -1 if sum(alpha) % 2 else 1
    out = {}
    for s, c in T.as_dict().items():
        beta = tuple(a + b for a, b in zip(alpha, s))
        if T.horizon is not None and sum(beta) > T.horizon:
            continue
        out[beta] = c * (sign * multi_falling(beta, alpha))
    return Functional(T.dims, T.horizon, out, T.field, f"d^{alpha} of {T.provenance}")


def poly_multiply(f, T):
    """<f T, x^b> = <T, f x^b>; the horizon drops by deg f."""
    if f.field != T.field:
        raise MixedFields(f"{f.field} polynomial times {T.field} functional")
    deg = max(poly_degree(f), 0)
    horizon = T.horizon
    if horizon is not None:
        if deg > horizon:
            raise HorizonExceeded(deg, horizon)
        horizon -= deg
    fd = f.as_dict()
    out = {}
    for s, c in T.as_dict().items():
        for gamma, a in fd.items():
            beta = tuple(x - y for x, y in zip(s, gamma))
            if min(beta, default=0) < 0:
                continue
            if horizon is not None and sum(beta) > horizon:
                continue
            new = out.get(beta, 0) + a * c
            if new == 0:
                out.pop(beta, None)
            else:
                out[beta] = new
    return Functional(T.dims, horizon, out, T.field, "product")


def inflect(T):
    """<T-check, phi> = <T, phi(-x)>: the moment at b picks up (-1)^|b|."""
    out = {b: (-c if sum(b) % 2 else c) for b, c in T.as_dict().items()}
    return Functional(T.dims, T.horizon, out, T.field, "inflection")


def _translate_axis(table, k, hk, dims, N):
    rational = isinstance(hk, Fraction) and all(isinstance(c, Fraction) for c in table.values())
    if rational:
        # integer arithmetic over the common denominator D * q^N
        D = lcm(*(c.denominator for c in table.values())) if table else 1
        table = {g: c.numerator * (D // c.denominator) for g, c in table.items()}
        p, q = hk.numerator, hk.denominator
        weights = [[comb(b, j) * p ** (b - j) * q ** (N - b + j) for j in range(b + 1)]
                   for b in range(N + 1)]
        scale = D * q ** N
    else:
        powers = [1]
        for _ in range(N):
            powers.append(powers[-1] * hk)
        weights = [[comb(b, j) * powers[b - j] for j in range(b + 1)] for b in range(N + 1)]
    out = {}
    for beta in multidegrees(dims, N):
        b = beta[k]
        head, tail = beta[:k], beta[k + 1:]
        acc = 0
        for j, w in enumerate(weights[b]):
            c = table.get(head + (j,) + tail)
            if c:
                acc += c * w
        if acc != 0:
            out[beta] = Fraction(acc, scale) if rational else acc
    return out


def translate(h, T):
    """tau_h T with <tau_h T, phi(x)> = <T, phi(x + h)>.

    Written T(y - h) in the customary notation.  Moments expand binomially:
    <tau_h T, x^b> = sum over g <= b of C(b, g) h^(b-g) T(g).
    """
    if T.horizon is None:
        raise ValueError("translate needs a finite horizon; call restrict(N) first")
    field = T.field
    h = [field(x) for x in h]
    if len(h) != T.dims:
        raise ValueError("shift vector length differs from dims")
    N = T.horizon
    out = T.as_dict()
    # the shift factors over coordinates: translate along one axis at a time
    for k, hk in enumerate(h):
        if hk != 0:
            out = _translate_axis(out, k, hk, T.dims, N)
    return Functional(T.dims, N, out, field, "translation")


def _piece_coeffs(poly):
    if isinstance(poly, FinSuppVec):
        return {b[0]: c for b, c in poly.as_dict().items()}
    return dict(enumerate(poly))


def schwartz_moments(pieces, horizon, field=Q):
    """Moments m_k = integral of f(x) x^k dx, k <= horizon, of a piecewise polynomial.

    ``pieces`` is a list of ``(a, b, coeffs)``: on [a, b] the function adds
    ``sum(coeffs[j] * x**j)``.  Endpoints are rationals, coefficients exact.
    """
    moments = {}
    for a, b, poly in pieces:
        a, b = Fraction(a), Fraction(b)
        if a > b:
            raise ValueError(f"interval [{a}, {b}] is reversed")
        for j, c in _piece_coeffs(poly).items():
            c = field(c)
            if c == 0:
                continue
            for k in range(horizon + 1):
                p = j + k + 1
                w = c * ((b ** p - a ** p) / p)
                moments[(k,)] = moments.get((k,), 0) + w
    return Functional(1, horizon, moments, field, "integral against a piecewise polynomial")


def _strip(coeffs):
    coeffs = [int(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _peval(coeffs, n):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * n + c
    return acc


class ParametricMomentFamily:
    """A sequence T_n of functionals whose moments are rational functions of n.

    ``rule(beta)`` returns ``(num, den)``: integer coefficient lists, lowest
    power first, so that ``<T_n, x^beta> = num(n) / den(n)`` for ``n >= n0``.
    """

    def __init__(self, dims, rule, n0=1, name="family"):
        self.dims = dims
        self.rule = rule
        self.n0 = n0
        self.name = name

    @classmethod
    def from_table(cls, dims, table, n0=1, name="family"):
        """Build from ``{beta: (num, den)}``; absent multi-degrees are zero."""
        table = {tuple(b): (list(nd[0]), list(nd[1])) for b, nd in table.items()}

        def rule(beta):
            return table.get(tuple(beta), ([0], [1]))
        fam = cls(dims, rule, n0, name)
        fam.table = table
        return fam

    def ratio(self, beta):
        num, den = self.rule(tuple(beta))
        num, den = _strip(num), _strip(den)
        if not den:
            raise ValueError(f"denominator of moment {beta} is identically zero")
        return num, den

    def value(self, beta, n):
        if n < self.n0:
            raise ValueError(f"family defined for n >= {self.n0}")
        num, den = self.ratio(beta)
        d = _peval(den, n)
        if d == 0:
            raise ZeroDivisionError(f"moment {beta} has a pole at n = {n}")
        return Fraction(_peval(num, n), d)

    def at(self, n, horizon):
        """The member T_n, truncated to ``horizon``."""
        table = {b: self.value(b, n) for b in multidegrees(self.dims, horizon)}
        return Functional(self.dims, horizon, table, Q, f"{self.name} at n={n}")


def box_family():
    """T_n = n * indicator of [0, 1/n]: moments n^-k / (k + 1)."""
    def rule(beta):
        k = beta[0]
        return [1], [0] * k + [k + 1]
    return ParametricMomentFamily(1, rule, 1, "box")


def weak_limit(family, horizon):
    """Pointwise limit n -> infinity of every moment up to ``horizon``.

    Each moment is a ratio of polynomials in n, so the limit is read off the
    degrees: zero if the numerator has lower degree, the ratio of leading
    coefficients if the degrees agree.  Any moment whose numerator has the
    larger degree diverges; all such degrees are reported in one
    :class:`Divergent` error.
    """
    table = {}
    bad = []
    for beta in multidegrees(family.dims, horizon):
        num, den = family.ratio(beta)
        if not num:
            continue
        if len(num) < len(den):
            continue
        if len(num) == len(den):
            table[beta] = Fraction(num[-1], den[-1])
        else:
            bad.append(beta if family.dims > 1 else beta[0])
    if bad:
        raise Divergent(bad)
    return Functional(family.dims, horizon, table, Q, f"weak limit of {family.name}")
