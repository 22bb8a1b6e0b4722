"""Command-line interface: ``hameldual <command> ...`` or ``python -m hameldual``.

Output is JSON by default (scalars as strings), or aligned text with
``--text``.  Exit status: 0 success, 1 domain error (a JSON error object is
printed), 2 usage error.
"""

import argparse
import json
import sys
from pathlib import Path

from . import basis as basis_mod
from . import cardinals as card
from .diffops import (as_operator_on_polys, apply_poly, fundamental_solution,
                      regularity_report, transpose)
from .duals import ParametricMomentFamily, box_family, delta, schwartz_moments, weak_limit
from .errors import HamelError
from .finsupp import FinSuppVec
from .operators import solve_dual
from .parser import parse
from .pointdist import convolve
from .poly import poly_str
from .scalars import Q, field_from_name
from .serialize import (diffop_to_json, functional_from_json,
                        functional_to_json, operator_from_json, pointdist_from_json,
                        report_to_json, vec_from_json, vec_to_json)


class UsageError(Exception):
    pass


def _load_json(text):
    """Inline JSON, or ``@path`` to read it from a file."""
    if text.startswith("@"):
        text = Path(text[1:]).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON input: {exc}") from None


def _field(args):
    return field_from_name(args.field) if args.field else None


def _op(args, text=None):
    return parse(text if text is not None else args.operator, args.dims, _field(args))


def _poly_from_text(text, dims, field):
    P = parse(text, dims, field)
    if any(any(a) for g, a in P.terms):
        raise UsageError("a polynomial may not contain derivatives")
    return FinSuppVec({g: c for (g, a), c in P.terms.items()}, P.field), P.dims


def _functional_out(T):
    out = functional_to_json(T)
    if T.dims == 1 and T.horizon is not None:
        out["sequence"] = [T.field.format(c) for c in T.moments()]
    return out


def _functional_text(T):
    if T.dims == 1 and T.horizon is not None:
        vals = [T.field.format(c) for c in T.moments()]
        w = len(str(T.horizon))
        return "\n".join(f"m_{n:<{w}} = {v}" for n, v in enumerate(vals))
    rows = [(str(tuple(b)), T.field.format(c)) for b, c in T.items()]
    if not rows:
        return f"zero functional, horizon {T.horizon}"
    w = max(len(r[0]) for r in rows)
    return "\n".join(f"{b:<{w}}  {v}" for b, v in rows)


# each command returns (json_obj, text)

def cmd_transpose(args):
    P = _op(args)
    Pt = transpose(P)
    return diffop_to_json(Pt), str(Pt)


def cmd_apply(args):
    P = _op(args)
    f, _ = _poly_from_text(args.polynomial, P.dims, P.field)
    g = apply_poly(P, f)
    return {"polynomial": vec_to_json(g), "text": poly_str(g)}, poly_str(g)


def cmd_fundsol(args):
    F = fundamental_solution(_op(args), args.order)
    return _functional_out(F), _functional_text(F)


def cmd_regularity(args):
    rep = regularity_report(_op(args), args.order)
    return report_to_json(rep), rep.summary()


def cmd_solve_dual(args):
    text = args.operator
    if text.lstrip().startswith(("{", "@")):
        O = operator_from_json(_load_json(text), _field(args))
    else:
        O = as_operator_on_polys(_op(args))
    if args.functional == "delta":
        T = delta(O.dims, args.order, O.field)
    else:
        T = functional_from_json(_load_json(args.functional), _field(args))
    L = solve_dual(O, T, args.order)
    return _functional_out(L), _functional_text(L)


def cmd_convolve(args):
    S = functional_from_json(_load_json(args.functional), _field(args))
    T = pointdist_from_json(_load_json(args.distribution), _field(args))
    R = convolve(S, T)
    return _functional_out(R), _functional_text(R)


def cmd_moments(args):
    field = _field(args) or Q
    pieces = []
    for a, b, coeffs in args.piece:
        cs = [field.parse(c) for c in coeffs.split(",") if c.strip()]
        pieces.append((field.parse(a), field.parse(b), cs))
    T = schwartz_moments(pieces, args.order, field)
    return _functional_out(T), _functional_text(T)


def cmd_weak_limit(args):
    if args.family == "box":
        fam = box_family()
    else:
        d = _load_json(args.family)
        table = {tuple(b): (num, den) for b, num, den in d["moments"]}
        fam = ParametricMomentFamily.from_table(d.get("dims", 1), table, d.get("n0", 1))
    T = weak_limit(fam, args.order)
    return _functional_out(T), _functional_text(T)


def _vectors(text, field):
    data = _load_json(text)
    if not isinstance(data, list):
        raise UsageError("expected a JSON list of vectors")
    return [vec_from_json(d, field) for d in data]


def cmd_basis(args):
    field = _field(args)
    vs = _vectors(args.vectors, field)
    if args.action == "is-free":
        cert = basis_mod.is_free(vs)
        out = {"verdict": cert.verdict}
        if not cert.free:
            fld = vs[0].field
            out["witness"] = [fld.format(c) for c in cert.witness_vector(len(vs), fld)]
            return out, f"Dependent: {' '.join(out['witness'])}"
        return out, "Free"
    if args.action == "rank":
        r = basis_mod.rank(vs)
        return {"rank": r}, str(r)
    if args.other is None:
        raise UsageError(f"basis {args.action} needs a second list of vectors")
    other = _vectors(args.other, field)
    if args.action == "extend":
        result = basis_mod.extend_to_basis(vs, other)
    else:
        result = basis_mod.complement(vs, other)
    out = {"vectors": [vec_to_json(v) for v in result]}
    return out, "\n".join(repr(v) for v in result)


def cmd_card(args):
    p = card.parse_cardinal
    a = args.action
    if a == "table":
        rows = card.example_table()
        out = [{"space": r.name, "dim": str(r.dim), "card": str(r.card)} for r in rows]
        return out, "\n".join(str(r) for r in rows)
    if a == "max":
        res = card.card_max(p(args.values[0]), p(args.values[1]))
    elif a == "succ":
        res = card.card_succ(p(args.values[0]))
    elif a == "pow":
        res = card.card_pow(p(args.values[0]), p(args.values[1]))
    else:
        if args.dim is None or args.field_card is None:
            raise UsageError(f"card {a} needs --dim and --field-card")
        fn = card.card_of_space if a == "of-space" else card.dim_of_dual
        res = fn(p(args.dim), p(args.field_card))
    return str(res), str(res)


def _common(sp, order=False):
    sp.add_argument("--dims", type=int, default=None, help="number of variables")
    sp.add_argument("--field", default=None, help="Q, Qi or GF:p")
    sp.add_argument("--text", action="store_true", help="aligned text instead of JSON")
    sp.add_argument("--output", default=None, help="write output to FILE")
    if order:
        sp.add_argument("--order", "-N", type=int, required=True, help="degree horizon")


def build_parser():
    ap = argparse.ArgumentParser(prog="hameldual",
                                 description="Exact dual-space computations on polynomial models.")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("transpose", help="formal transpose of a differential operator")
    sp.add_argument("operator")
    _common(sp)
    sp.set_defaults(func=cmd_transpose)

    sp = sub.add_parser("apply", help="apply a differential operator to a polynomial")
    sp.add_argument("operator")
    sp.add_argument("polynomial")
    _common(sp)
    sp.set_defaults(func=cmd_apply)

    sp = sub.add_parser("solve-dual", help="solve O* L = T up to degree N")
    sp.add_argument("operator", help="operator text, or operator JSON (inline or @file)")
    sp.add_argument("--functional", default="delta", help="functional JSON or 'delta'")
    _common(sp, order=True)
    sp.set_defaults(func=cmd_solve_dual)

    sp = sub.add_parser("fundsol", help="fundamental solution P* F = delta")
    sp.add_argument("operator")
    _common(sp, order=True)
    sp.set_defaults(func=cmd_fundsol)

    sp = sub.add_parser("regularity", help="transpose, injectivity probe and flags")
    sp.add_argument("operator")
    _common(sp, order=True)
    sp.set_defaults(func=cmd_regularity)

    sp = sub.add_parser("convolve", help="convolve a functional with a point distribution")
    sp.add_argument("functional")
    sp.add_argument("distribution")
    _common(sp)
    sp.set_defaults(func=cmd_convolve)

    sp = sub.add_parser("moments", help="moments of a piecewise polynomial")
    sp.add_argument("--piece", nargs=3, action="append", required=True,
                    metavar=("A", "B", "COEFFS"),
                    help="interval [A, B] and comma-separated coefficients c0,c1,...")
    _common(sp, order=True)
    sp.set_defaults(func=cmd_moments)

    sp = sub.add_parser("weak-limit", help="weak limit of a parametric moment family")
    sp.add_argument("family", help="'box' or family JSON")
    _common(sp, order=True)
    sp.set_defaults(func=cmd_weak_limit)

    sp = sub.add_parser("basis", help="free sets, bases and complements")
    sp.add_argument("action", choices=["is-free", "extend", "complement", "rank"])
    sp.add_argument("vectors", help="JSON list of vectors (inline or @file)")
    sp.add_argument("other", nargs="?", default=None,
                    help="ambient list for extend, V basis for complement")
    _common(sp)
    sp.set_defaults(func=cmd_basis)

    sp = sub.add_parser("card", help="cardinal arithmetic under GCH")
    sp.add_argument("action", choices=["max", "succ", "pow", "of-space", "dim-dual", "table"])
    sp.add_argument("values", nargs="*")
    sp.add_argument("--dim", default=None)
    sp.add_argument("--field-card", default=None)
    _common(sp)
    sp.set_defaults(func=cmd_card)
    return ap


_ARITY = {"max": 2, "succ": 1, "pow": 2}


def _error_payload(exc):
    out = exc.payload()
    for name in ("witness", "residual"):
        v = getattr(exc, name, None)
        if isinstance(v, FinSuppVec):
            out[name] = vec_to_json(v)
            if v and all(isinstance(s, tuple) for s in v.as_dict()):
                out[name + "_text"] = poly_str(v)
    T = getattr(exc, "functional", None)
    if T is not None:
        out["functional"] = functional_to_json(T)
    for name in ("needed", "horizon", "position", "degrees"):
        if hasattr(exc, name):
            out[name] = getattr(exc, name)
    return out


def _emit(text, path):
    if path:
        Path(path).write_text(text + "\n", encoding="utf-8")
    else:
        sys.stdout.write(text + "\n")


def _shield_negative_pieces(argv):
    """Let ``--piece -1/2 1/2 ...`` through: argparse reads ``-1/2`` as a flag."""
    out = list(argv)
    for i, tok in enumerate(out):
        if tok == "--piece":
            for j in range(i + 1, min(i + 4, len(out))):
                if out[j].startswith("-") and len(out[j]) > 1 and out[j][1] in "0123456789(":
                    out[j] = " " + out[j]
    return out


def run(argv=None):
    ap = build_parser()
    argv = _shield_negative_pieces(sys.argv[1:] if argv is None else argv)
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.command == "card" and len(args.values) != _ARITY.get(args.action, 0):
            raise UsageError(f"card {args.action} takes {_ARITY.get(args.action, 0)} values")
        obj, text = args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"hameldual: error: {exc}\n")
        return 2
    except HamelError as exc:
        _emit(json.dumps(_error_payload(exc), ensure_ascii=False), args.output)
        return 1
    except (ValueError, ZeroDivisionError, KeyError, TypeError) as exc:
        payload = {"error": type(exc).__name__, "message": str(exc)}
        _emit(json.dumps(payload), args.output)
        return 1
    _emit(text if args.text else json.dumps(obj, ensure_ascii=False), args.output)
    return 0


def main():
    sys.exit(run())
