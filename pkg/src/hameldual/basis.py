"""Free sets, basis extension and algebraic complements at finite scale.

Candidates are always scanned in the order given, and a candidate is kept
exactly when the kept family stays free.  This is one fixed, reproducible
choice among the many bases whose existence Zorn's lemma guarantees.
"""

from dataclasses import dataclass
from typing import Optional

from ._echelon import Echelon
from .errors import NotFree, NotInSpan, NotSubspace
from .finsupp import FinSuppVec, _common_field, coordinate_iso, index_key

__all__ = [
    "FreenessCertificate", "is_free", "extend_to_basis", "complement", "rank",
    "spans",
]


@dataclass(frozen=True)
class FreenessCertificate:
    """Outcome of :func:`is_free`.

    When ``free`` is false, ``witness`` maps list positions to scalars with
    ``sum(witness[i] * vs[i]) == 0`` and at least one nonzero entry.
    """

    free: bool
    witness: Optional[dict] = None

    @property
    def verdict(self):
        return "Free" if self.free else "Dependent"

    def witness_vector(self, n, field):
        """The witness as a coefficient list of length ``n``."""
        w = self.witness or {}
        return [w.get(i, field.zero) for i in range(n)]


def _echelon_of(vs):
    field = _common_field(vs)
    return field, Echelon(field, index_key)


def is_free(vs):
    vs = list(vs)
    field, ech = _echelon_of(vs)
    for pos, v in enumerate(vs):
        dep = ech.insert(v._entries, pos)
        if dep is not None:
            witness = {i: field(c) for i, c in dep.items()}
            return FreenessCertificate(False, witness)
    return FreenessCertificate(True)


def rank(vs):
    vs = list(vs)
    _, ech = _echelon_of(vs)
    for pos, v in enumerate(vs):
        ech.insert(v._entries, pos)
    return len(ech)


def _require_free(E):
    cert = is_free(E)
    if not cert.free:
        field = _common_field(E)
        raise NotFree(FinSuppVec(
            {f"v{i}": c for i, c in cert.witness.items()}, field))


def extend_to_basis(E, ambient):
    """Extend the free list ``E`` by members of ``ambient`` to a basis of span(ambient).

    The output starts with ``E``.  Raises :class:`NotFree` when ``E`` is
    dependent and :class:`NotSubspace` when span(E) is not inside
    span(ambient).
    """
    E, ambient = list(E), list(ambient)
    _require_free(E)
    field, ech = _echelon_of(E + ambient)
    for pos, v in enumerate(E):
        ech.insert(v._entries, ("E", pos))
    out = list(E)
    for pos, v in enumerate(ambient):
        if ech.insert(v._entries, ("A", pos)) is None:
            out.append(v)
    if len(out) != rank(ambient):
        raise NotSubspace("span(E) is not contained in span(ambient)")
    return out


def complement(U_basis, V_basis):
    """A list W with span(U) (+) span(W) == span(V), drawn from ``V_basis``."""
    U_basis, V_basis = list(U_basis), list(V_basis)
    _require_free(U_basis)
    if V_basis:
        labelled = [(f"v{i}", v) for i, v in enumerate(V_basis)]
        for u in U_basis:
            try:
                coordinate_iso(u, _independent(labelled))
            except NotInSpan:
                raise NotSubspace(f"{u} is not in span(V)") from None
    elif U_basis:
        raise NotSubspace("U is nonzero but V is the zero space")
    return extend_to_basis(U_basis, V_basis)[len(U_basis):]


def _independent(labelled):
    vs = [v for _, v in labelled]
    if not vs:
        return []
    field, ech = _echelon_of(vs)
    keep = []
    for label, v in labelled:
        if ech.insert(v._entries, label) is None:
            keep.append((label, v))
    return keep


def spans(vs, target):
    """True when every vector in ``target`` lies in span(vs)."""
    keep = _independent([(f"v{i}", v) for i, v in enumerate(vs)])
    for t in target:
        try:
            coordinate_iso(t, keep)
        except NotInSpan:
            return False
    return True
