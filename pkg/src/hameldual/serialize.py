"""JSON-ready dictionaries for every value type, and their inverses.

Scalars are always strings ("3/4", "1/2-2i", residues mod p) so that no
consumer ever sees a float.  Multi-degrees are lists of naturals; atoms are
plain strings.
"""

from .diffops import DiffOp
from .duals import Functional
from .finsupp import FinSuppVec, index_key
from .operators import ColumnFiniteOperator
from .pointdist import PointDistribution
from .poly import multidegrees, poly_str
from .scalars import field_from_name

__all__ = [
    "vec_to_json", "vec_from_json", "functional_to_json", "functional_from_json",
    "operator_to_json", "operator_from_json", "diffop_to_json", "diffop_from_json",
    "pointdist_to_json", "pointdist_from_json", "certificate_to_json",
    "report_to_json",
]


def _index_out(s):
    return s if isinstance(s, str) else list(s)


def _index_in(s):
    return s if isinstance(s, str) else tuple(s)


def vec_to_json(v):
    return {"field": v.field.name,
            "entries": [[_index_out(s), v.field.format(c)] for s, c in v.items()]}


def vec_from_json(d, field=None):
    field = field or field_from_name(d.get("field", "Q"))
    return FinSuppVec([(_index_in(s), field.parse(c)) for s, c in d["entries"]], field)


def functional_to_json(T):
    return {"dims": T.dims, "horizon": T.horizon, "field": T.field.name,
            "moments": [[_index_out(b), T.field.format(c)] for b, c in T.items()]}


def functional_from_json(d, field=None):
    field = field or field_from_name(d.get("field", "Q"))
    table = {_index_in(b): field.parse(c) for b, c in d.get("moments", [])}
    return Functional(d["dims"], d.get("horizon"), table, field)


def operator_to_json(O, horizon=None):
    """Explicit-table operators serialize exactly; rule-based ones need ``horizon``."""
    table = getattr(O, "table", None)
    if table is not None:
        cols = sorted(table.items(), key=lambda kv: index_key(kv[0]))
        default = O.default
    else:
        if horizon is None:
            raise ValueError("rule-based operator needs a horizon to serialize")
        cols = [(b, O.column(b)) for b in multidegrees(O.dims, horizon)]
        default = "zero"
    out = {"dims": O.dims, "shift": O.shift, "field": O.field.name,
           "columns": [[list(b), vec_to_json(c)] for b, c in cols],
           "default": default}
    if table is None:
        out["horizon"] = horizon
    return out


def operator_from_json(d, field=None):
    field = field or field_from_name(d.get("field", "Q"))
    cols = {}
    for b, c in d.get("columns", []):
        if isinstance(c, dict):
            c = vec_from_json(c, field)
        else:
            c = FinSuppVec([(tuple(s), field.parse(x)) for s, x in c], field)
        cols[tuple(b)] = c
    return ColumnFiniteOperator.from_columns(
        d["dims"], cols, d["shift"], d.get("default", "identity"), field)


def diffop_to_json(P):
    return {"dims": P.dims, "field": P.field.name, "text": str(P),
            "terms": [[list(g), list(a), P.field.format(c)] for (g, a), c in P.items()]}


def diffop_from_json(d, field=None):
    field = field or field_from_name(d.get("field", "Q"))
    return DiffOp(d["dims"], {(tuple(g), tuple(a)): field.parse(c)
                              for g, a, c in d["terms"]}, field)


def pointdist_to_json(T):
    return {"dims": T.dims, "field": T.field.name,
            "atoms": [[[T.field.format(x) for x in a], list(b), T.field.format(c)]
                      for (a, b), c in T.items()]}


def pointdist_from_json(d, field=None):
    field = field or field_from_name(d.get("field", "Q"))
    atoms = {(tuple(field.parse(str(x)) for x in a), tuple(b)): field.parse(c)
             for a, b, c in d["atoms"]}
    return PointDistribution(d["dims"], atoms, field)


def certificate_to_json(cert):
    out = {"verdict": cert.verdict, "N": cert.N}
    if cert.witness is not None:
        out["witness"] = vec_to_json(cert.witness)
        out["witness_text"] = poly_str(cert.witness)
    return out


def report_to_json(report):
    return {"operator": diffop_to_json(report.operator),
            "transpose": diffop_to_json(report.transpose),
            "probe": certificate_to_json(report.probe),
            "flags": list(report.flags)}
