"""Finite-support vectors over arbitrary index sets.

An index is either an atom (a ``str``) or a multi-degree (a ``tuple`` of
natural numbers).  Indices are totally ordered:

* atoms come before multi-degrees, and are ordered as strings;
* multi-degrees are ordered by total degree first, then in dictionary order
  of their monomial words, so that ``x1**2 < x1*x2 < x2**2`` and
  ``x1 < x2``.  On exponent tuples of equal degree this is *descending*
  lexicographic order: ``(2, 0) < (1, 1) < (0, 2)``.

The degree-first order is the grading used by the operator solver.
"""

from ._echelon import Echelon
from .errors import MixedFields, NotFree, NotInSpan
from .scalars import Q

__all__ = [
    "FinSuppVec", "index_key", "index_degree", "basis_vector",
    "linear_combine", "spectrum", "coordinate_iso", "expand",
    "inner_product", "zero_vector",
]


def _check_index(s):
    if isinstance(s, str):
        return s
    if isinstance(s, tuple) and all(isinstance(e, int) and e >= 0 for e in s):
        return s
    if isinstance(s, list):
        return _check_index(tuple(s))
    raise TypeError(f"an index is a str or a tuple of naturals, got {s!r}")


def index_key(s):
    """Sort key realizing the documented index order."""
    if isinstance(s, str):
        return (0, 0, s)
    return (1, sum(s), tuple(-e for e in s))


def index_degree(s):
    """Total degree of a multi-degree; atoms have degree zero."""
    if isinstance(s, str):
        return 0
    return sum(s)


class FinSuppVec:
    """An element of K_0^S: a finitely supported map from indices to scalars.

    Zero coefficients are never stored, so two vectors are equal exactly when
    their entry mappings are equal.  Instances are immutable.
    """

    __slots__ = ("field", "_entries", "_hash")

    def __init__(self, entries=(), field=Q):
        if isinstance(entries, dict):
            entries = entries.items()
        clean = {}
        for s, c in entries:
            s = _check_index(s)
            c = field(c)
            if s in clean:
                c = clean[s] + c
            if c == 0:
                clean.pop(s, None)
            else:
                clean[s] = c
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_entries", clean)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, entries, field):
        # trusted constructor: entries already coerced and nonzero
        v = object.__new__(cls)
        object.__setattr__(v, "field", field)
        object.__setattr__(v, "_entries", entries)
        object.__setattr__(v, "_hash", None)
        return v

    def __setattr__(self, name, value):
        raise AttributeError("FinSuppVec is immutable")

    def __getitem__(self, s):
        return self._entries.get(s, self.field.zero)

    def __contains__(self, s):
        return s in self._entries

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self.spectrum())

    def items(self):
        """Entries in index order."""
        return [(s, self._entries[s]) for s in self.spectrum()]

    def as_dict(self):
        return dict(self._entries)

    def spectrum(self):
        return sorted(self._entries, key=index_key)

    def is_zero(self):
        return not self._entries

    def __bool__(self):
        return bool(self._entries)

    def _same_field(self, other):
        if self.field != other.field:
            raise MixedFields(f"{self.field} vector combined with {other.field} vector")

    def __add__(self, other):
        if not isinstance(other, FinSuppVec):
            return NotImplemented
        self._same_field(other)
        out = dict(self._entries)
        for s, c in other._entries.items():
            new = out.get(s, 0) + c
            if new == 0:
                out.pop(s, None)
            else:
                out[s] = new
        return FinSuppVec._raw(out, self.field)

    def __neg__(self):
        return FinSuppVec._raw({s: -c for s, c in self._entries.items()}, self.field)

    def __sub__(self, other):
        if not isinstance(other, FinSuppVec):
            return NotImplemented
        return self + (-other)

    def scale(self, a):
        a = self.field(a)
        if a == 0:
            return FinSuppVec._raw({}, self.field)
        return FinSuppVec._raw({s: a * c for s, c in self._entries.items()}, self.field)

    def __mul__(self, a):
        if isinstance(a, FinSuppVec):
            return NotImplemented
        return self.scale(a)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, FinSuppVec):
            return NotImplemented
        return self.field == other.field and self._entries == other._entries

    def __hash__(self):
        if self._hash is None:
            h = hash((self.field, frozenset(self._entries.items())))
            object.__setattr__(self, "_hash", h)
        return self._hash

    def over(self, field):
        """The same vector with its scalars coerced into ``field``."""
        return FinSuppVec(self._entries, field)

    def __repr__(self):
        inner = ", ".join(f"{s!r}: {self.field.format(c)}" for s, c in self.items())
        return f"FinSuppVec({{{inner}}}, {self.field})"


def zero_vector(field=Q):
    return FinSuppVec((), field)


def basis_vector(s, field=Q):
    """The standard basis vector e_s."""
    return FinSuppVec({s: 1}, field)


def linear_combine(terms):
    """Exact sum of ``a * v`` over ``(a, v)`` pairs; all vectors share one field."""
    terms = list(terms)
    if not terms:
        return zero_vector()
    field = terms[0][1].field
    out = {}
    for a, v in terms:
        if v.field != field:
            raise MixedFields(f"{field} and {v.field} in one combination")
        a = field(a)
        if a == 0:
            continue
        for s, c in v._entries.items():
            new = out.get(s, 0) + a * c
            if new == 0:
                out.pop(s, None)
            else:
                out[s] = new
    return FinSuppVec._raw(out, field)


def spectrum(v):
    """Indices carrying a nonzero coefficient, in index order.  sp(0) = []."""
    return v.spectrum()


def _common_field(vectors, default=Q):
    fields = {v.field for v in vectors}
    if len(fields) > 1:
        raise MixedFields(f"mixed fields {sorted(map(str, fields))}")
    return fields.pop() if fields else default


def coordinate_iso(v, basis):
    """Coordinates of ``v`` relative to a free family.

    ``basis`` is a list of ``(label, vector)`` pairs.  Returns ``f`` over the
    labels with ``v == sum(f[s] * v_s)``.  Raises :class:`NotFree` if the
    family is dependent and :class:`NotInSpan` (carrying the residual) if
    ``v`` lies outside its span.
    """
    basis = list(basis)
    field = _common_field([v] + [b for _, b in basis], v.field)
    ech = Echelon(field, index_key)
    for pos, (_, b) in enumerate(basis):
        dep = ech.insert(b._entries, pos)
        if dep is not None:
            raise NotFree(FinSuppVec({basis[i][0]: c for i, c in dep.items()}, field))
    residual, combo = ech.reduce(v._entries)
    if residual:
        raise NotInSpan(FinSuppVec(residual, field))
    return FinSuppVec({basis[pos][0]: c for pos, c in combo.items()}, field)


def expand(f, basis):
    """Inverse of :func:`coordinate_iso`: sum of ``f[s] * v_s``."""
    lookup = dict(basis)
    return linear_combine([(c, lookup[s]) for s, c in f.items()]) if f else \
        zero_vector(f.field)


def inner_product(v, w):
    """(v, w) = sum over sp(v) & sp(w) of conj(a_r) * b_r.

    The basis is orthonormal for this product.  Conjugation is complex
    conjugation over Q(i) and the identity over Q and GF(p).
    """
    field = _common_field([v, w])
    acc = field.zero
    small, big = (v, w) if len(v) <= len(w) else (w, v)
    for s in small._entries:
        if s in big._entries:
            acc = acc + field.conj(v._entries[s]) * w._entries[s]
    return acc
