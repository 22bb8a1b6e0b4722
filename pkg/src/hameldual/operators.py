"""Column-finite operators on polynomial spaces and the surjective-dual solver.

An operator O is given by its columns: the image of each monomial x^b as a
finite-support vector.  A degree shift s bounds the columns,
deg O(x^b) <= |b| + s, which is what makes truncation to a finite horizon
meaningful.

The dual O* acts on functionals by (O* T)(b) = <T, O(x^b)>.  When O is
injective every T has a preimage under O*: :func:`solve_dual` builds one by
prescribing L on the range of O and extending it by zero on a complement of
the range spanned by unit vectors.
"""

from dataclasses import dataclass, field as dc_field
from typing import Optional

from ._echelon import Echelon
from .duals import Functional, eval_bracket, indicator
from .errors import DegreeBoundViolated, HorizonExceeded, MixedFields, NotInjective
from .finsupp import FinSuppVec, index_key
from .poly import multidegrees, poly_str
from .scalars import Q

__all__ = [
    "ColumnFiniteOperator", "InjectivityCertificate", "apply", "dual_apply",
    "injectivity_probe", "solve_dual", "identity_operator",
]


def _top_first(s):
    # reverse of index_key on multi-degrees: pivots sit on leading monomials
    return (-sum(s), s)


class ColumnFiniteOperator:
    """A linear operator on K[x1..xd] given column by column.

    ``column`` maps a multi-degree to the image of that monomial (a
    FinSuppVec or a plain dict).  Columns are computed on demand, cached,
    and checked against the degree bound when first requested.
    """

    def __init__(self, dims, column, shift, field=Q, name="operator"):
        self.dims = dims
        self.shift = shift
        self.field = field
        self.name = name
        self._rule = column
        self._cache = {}

    @classmethod
    def from_columns(cls, dims, columns, shift, default="identity", field=Q,
                     name="operator"):
        """Operator from an explicit ``{beta: image}`` table.

        Unlisted columns are the identity column or zero, per ``default``.
        """
        if default not in ("identity", "zero"):
            raise ValueError("default must be 'identity' or 'zero'")
        table = {}
        for beta, img in dict(columns).items():
            if not isinstance(img, FinSuppVec):
                img = FinSuppVec(img, field)
            table[tuple(beta)] = img

        def rule(beta):
            if beta in table:
                return table[beta]
            if default == "identity":
                return FinSuppVec({beta: 1}, field)
            return FinSuppVec((), field)
        op = cls(dims, rule, shift, field, name)
        op.table = table
        op.default = default
        return op

    def column(self, beta):
        beta = tuple(beta)
        col = self._cache.get(beta)
        if col is None:
            col = self._rule(beta)
            if not isinstance(col, FinSuppVec):
                col = FinSuppVec(col, self.field)
            bound = sum(beta) + self.shift
            for s in col.as_dict():
                if len(s) != self.dims:
                    raise DegreeBoundViolated(f"column {beta} has index {s} of the wrong length")
                if sum(s) > bound:
                    raise DegreeBoundViolated(
                        f"column {beta} reaches degree {sum(s)} above the bound {bound}")
            self._cache[beta] = col
        return col

    def __repr__(self):
        return f"ColumnFiniteOperator({self.name!r}, dims={self.dims}, shift={self.shift})"


def identity_operator(dims, field=Q):
    return ColumnFiniteOperator(dims, lambda b: FinSuppVec({b: 1}, field), 0, field, "identity")


def apply(O, v):
    """O(v) = sum of v(s) * column(s)."""
    out = {}
    for s, c in v.as_dict().items():
        for t, a in O.column(s).as_dict().items():
            new = out.get(t, 0) + c * a
            if new == 0:
                out.pop(t, None)
            else:
                out[t] = new
    return FinSuppVec._raw(out, O.field)


def dual_apply(O, T):
    """(O* T)(b) = <T, O(x^b)>, with horizon T.horizon - max(shift, 0)."""
    if T.horizon is None:
        raise ValueError("dual_apply needs a finite horizon; call restrict(N) first")
    horizon = T.horizon - max(O.shift, 0)
    if horizon < 0:
        raise HorizonExceeded(O.shift, T.horizon)
    table = {}
    for beta in multidegrees(O.dims, horizon):
        c = eval_bracket(T, O.column(beta))
        if c != 0:
            table[beta] = c
    return Functional(O.dims, horizon, table, T.field, f"dual of {O.name}")


@dataclass(frozen=True)
class InjectivityCertificate:
    """Result of :func:`injectivity_probe`.

    ``verdict`` is ``"InjectiveUpTo"`` or ``"KernelWitness"``.  In the second
    case ``witness`` is a nonzero polynomial with O(witness) == 0 and
    ``kernel_basis`` lists a basis of the truncated kernel.
    """

    verdict: str
    N: int
    witness: Optional[FinSuppVec] = None
    kernel_basis: tuple = dc_field(default=())

    @property
    def injective(self):
        return self.verdict == "InjectiveUpTo"

    def __str__(self):
        if self.injective:
            return f"InjectiveUpTo({self.N})"
        return f"KernelWitness({poly_str(self.witness)})"


def _reduce_columns(O, M):
    """Echelon of the columns up to degree M, plus the kernel vectors found."""
    ech = Echelon(O.field, _top_first)
    kernel = []
    for beta in multidegrees(O.dims, M):
        dep = ech.insert(O.column(beta).as_dict(), beta)
        if dep is not None:
            kernel.append(FinSuppVec(dep, O.field))
    return ech, kernel


def _pick_witness(kernel):
    # constants are the least informative kernel vectors; prefer anything else
    for v in kernel:
        if any(sum(s) for s in v.as_dict()):
            return v
    return kernel[0]


def injectivity_probe(O, N):
    """Exact kernel of O restricted to polynomials of degree <= N."""
    _, kernel = _reduce_columns(O, N)
    if not kernel:
        return InjectivityCertificate("InjectiveUpTo", N)
    return InjectivityCertificate("KernelWitness", N, _pick_witness(kernel), tuple(kernel))


def solve_dual(O, T, N):
    """A functional L with dual_apply(O, L) == T through degree N - max(shift, 0).

    L is prescribed on the images O(x^b), |b| <= N - max(shift, 0), and set
    to zero on the unit vectors completing those images to a basis of the
    polynomials of degree <= N.  The result has horizon N.

    Raises :class:`NotInjective` when some nonzero polynomial of degree
    within range is killed by O; the exception carries the kernel vector
    and an indicator functional for which no solution exists.
    """
    if T.field != O.field:
        raise MixedFields(f"{O.field} operator with {T.field} functional")
    M = N - max(O.shift, 0)
    if M < 0:
        raise HorizonExceeded(max(O.shift, 0), N)
    if T.horizon is not None and T.horizon < M:
        raise HorizonExceeded(M, T.horizon)
    ech, kernel = _reduce_columns(O, M)
    if kernel:
        v = _pick_witness(kernel)
        s = min(v.as_dict(), key=index_key)
        raise NotInjective(v, indicator(s, M, O.field))
    values = {beta: T[beta] for beta in ech.inputs}
    table = ech.solve_functional(values)
    return Functional(O.dims, N, table, O.field, f"preimage under dual of {O.name}")
