"""Point-supported distributions and their convolution with moment functionals."""

from fractions import Fraction

from .duals import Functional, derivative, translate
from .errors import MixedFields
from .poly import monomial, multidegrees, poly_diff
from .scalars import Q

__all__ = ["PointDistribution", "convolve"]


def _point(a, field):
    return tuple(field(Fraction(x) if isinstance(x, str) else x) for x in a)


class PointDistribution:
    """sum of c * d^beta delta_a over finitely many (a, beta)."""

    __slots__ = ("dims", "field", "_atoms")

    def __init__(self, dims, atoms=(), field=Q):
        if isinstance(atoms, dict):
            atoms = atoms.items()
        clean = {}
        for (a, beta), c in atoms:
            a, beta = _point(a, field), tuple(beta)
            if len(a) != dims or len(beta) != dims:
                raise ValueError(f"atom {a}, {beta} does not have {dims} coordinates")
            new = clean.get((a, beta), 0) + field(c)
            if new == 0:
                clean.pop((a, beta), None)
            else:
                clean[(a, beta)] = new
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_atoms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("PointDistribution is immutable")

    @classmethod
    def delta(cls, a=None, dims=1, field=Q):
        """delta_a; the origin when ``a`` is omitted."""
        a = tuple(a) if a is not None else (0,) * dims
        return cls(len(a), {(a, (0,) * len(a)): 1}, field)

    @property
    def atoms(self):
        return dict(self._atoms)

    def items(self):
        return sorted(self._atoms.items(),
                      key=lambda kv: (tuple(map(str, kv[0][0])), kv[0][1]))

    @property
    def order(self):
        return max((sum(b) for _, b in self._atoms), default=0)

    def inflect(self):
        """T-check: points reflected, sign (-1)^|beta|."""
        out = {}
        for (a, beta), c in self._atoms.items():
            out[(tuple(-x for x in a), beta)] = -c if sum(beta) % 2 else c
        return PointDistribution(self.dims, out, self.field)

    def derivative(self, alpha):
        alpha = tuple(alpha)
        out = {(a, tuple(x + y for x, y in zip(beta, alpha))): c
               for (a, beta), c in self._atoms.items()}
        return PointDistribution(self.dims, out, self.field)

    def pair(self, f):
        """<T, f> = sum of c * (-1)^|beta| (d^beta f)(a)."""
        acc = self.field.zero
        for (a, beta), c in self._atoms.items():
            df = poly_diff(f, beta)
            for gamma, b in df.as_dict().items():
                w = b
                for x, e in zip(a, gamma):
                    if e:
                        w = w * x ** e
                acc = acc + (-c if sum(beta) % 2 else c) * w
        return acc

    def moments(self, horizon):
        """The moment functional of this distribution up to ``horizon``."""
        table = {}
        for gamma in multidegrees(self.dims, horizon):
            v = self.pair(monomial(gamma, self.field))
            if v != 0:
                table[gamma] = v
        return Functional(self.dims, horizon, table, self.field, "point distribution")

    def __add__(self, other):
        if self.field != other.field:
            raise MixedFields(f"{self.field} with {other.field}")
        out = dict(self._atoms)
        for k, c in other._atoms.items():
            out[k] = out.get(k, 0) + c
        return PointDistribution(self.dims, out, self.field)

    def __mul__(self, c):
        c = self.field(c)
        return PointDistribution(self.dims, {k: c * v for k, v in self._atoms.items()},
                                 self.field)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PointDistribution):
            return NotImplemented
        return (self.dims, self.field, self._atoms) == (other.dims, other.field, other._atoms)

    def __hash__(self):
        return hash((self.dims, self.field, frozenset(self._atoms.items())))

    def __repr__(self):
        parts = [f"{self.field.format(c)}*d^{b} delta_{tuple(str(x) for x in a)}"
                 for (a, b), c in self.items()]
        return f"PointDistribution({' + '.join(parts) or '0'})"


def convolve(S, T):
    """S * T for a moment functional S and a point distribution T.

    <S * T, phi> = <S, T-check * phi>.  For one atom c d^b delta_a this is
    c d^b (tau_a S), which is how it is computed; the horizon of S is kept.
    """
    if S.field != T.field:
        raise MixedFields(f"{S.field} functional with {T.field} distribution")
    if S.dims != T.dims:
        raise ValueError("functional and distribution in different dimensions")
    if S.horizon is None:
        raise ValueError("convolve needs a finite horizon; call restrict(N) first")
    shifted = {}
    total = Functional(S.dims, S.horizon, {}, S.field)
    for (a, beta), c in T._atoms.items():
        if a not in shifted:
            shifted[a] = translate(a, S) if any(a) else S
        total = total + derivative(beta, shifted[a]).scale(c)
    return Functional(S.dims, S.horizon, total.as_dict(), S.field, "convolution")
