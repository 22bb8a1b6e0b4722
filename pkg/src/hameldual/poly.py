"""Sparse multivariate polynomials as FinSuppVec over exponent tuples.

A polynomial in d variables is the vector sum c_b e_b over multi-degrees b
(tuples of length d); e_b stands for the monomial x^b.
"""

from math import comb, prod

from .finsupp import FinSuppVec, index_key
from .scalars import Q

__all__ = [
    "monomial", "constant", "variable", "poly_mul", "poly_pow", "poly_diff",
    "poly_degree", "poly_shift", "multidegrees", "falling", "multi_falling",
    "multi_binom", "sub_indices", "poly_str",
]


def monomial(beta, field=Q, coeff=1):
    return FinSuppVec({tuple(beta): coeff}, field)


def constant(c, dims, field=Q):
    return FinSuppVec({(0,) * dims: c}, field)


def variable(k, dims, field=Q):
    """x_k, counting variables from 1."""
    e = [0] * dims
    e[k - 1] = 1
    return FinSuppVec({tuple(e): 1}, field)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def poly_mul(f, g):
    out = {}
    for a, c in f.as_dict().items():
        for b, d in g.as_dict().items():
            k = _add(a, b)
            new = out.get(k, 0) + c * d
            if new == 0:
                out.pop(k, None)
            else:
                out[k] = new
    return FinSuppVec._raw(out, f.field)


def poly_pow(f, n, dims):
    result = constant(1, dims, f.field)
    for _ in range(n):
        result = poly_mul(result, f)
    return result


def falling(n, k):
    """n (n-1) ... (n-k+1); zero when k > n."""
    if k > n:
        return 0
    return prod(range(n - k + 1, n + 1))


def multi_falling(beta, alpha):
    return prod(falling(b, a) for b, a in zip(beta, alpha))


def multi_binom(beta, gamma):
    return prod(comb(b, g) for b, g in zip(beta, gamma))


def sub_indices(beta):
    """All gamma <= beta componentwise."""
    out = [()]
    for b in beta:
        out = [g + (i,) for g in out for i in range(b + 1)]
    return out


def poly_diff(f, alpha):
    """The partial derivative d^alpha f."""
    out = {}
    for beta, c in f.as_dict().items():
        k = multi_falling(beta, alpha)
        if k:
            out[tuple(b - a for b, a in zip(beta, alpha))] = c * k
    return FinSuppVec(out, f.field)


def poly_degree(f):
    """Total degree; the zero polynomial has degree -1."""
    return max((sum(b) for b in f.as_dict()), default=-1)


def poly_shift(f, h):
    """f(x + h), expanded exactly."""
    field = f.field
    h = [field(x) for x in h]
    out = {}
    for beta, c in f.as_dict().items():
        for gamma in sub_indices(beta):
            w = c * multi_binom(beta, gamma)
            for hk, b, g in zip(h, beta, gamma):
                if b - g:
                    w = w * hk ** (b - g)
            if w == 0:
                continue
            new = out.get(gamma, 0) + w
            if new == 0:
                out.pop(gamma, None)
            else:
                out[gamma] = new
    return FinSuppVec._raw(out, field)


def multidegrees(dims, top):
    """Every multi-degree of total degree <= top, in index order."""
    found = []

    def rec(prefix, left, slots):
        if slots == 1:
            found.append(prefix + (left,))
            return
        for e in range(left + 1):
            rec(prefix + (e,), left - e, slots - 1)

    for n in range(top + 1):
        if dims == 0:
            if n == 0:
                found.append(())
            continue
        rec((), n, dims)
    return sorted(found, key=index_key)


def _var_names(dims):
    return ["x"] if dims == 1 else [f"x{k}" for k in range(1, dims + 1)]


def _monomial_str(beta, names):
    parts = []
    for name, e in zip(names, beta):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def coef_str(c, field):
    """Compact coefficient text; Gaussian values drop zero parts."""
    if field.name != "Qi":
        return field.format(c)
    if c.im == 0:
        return Q.format(c.re)
    im = Q.format(c.im)
    im = {"1": "", "-1": "-"}.get(im, im + "*")
    if c.re == 0:
        return f"{im}i"
    sign = "+"
    if im.startswith("-"):
        sign, im = "-", im[1:]
    return f"({Q.format(c.re)} {sign} {im}i)"


def poly_str(f, names=None):
    """Human-readable form, highest degree first, then x1 before x2."""
    if not f:
        return "0"
    dims = len(next(iter(f.as_dict())))
    names = names or _var_names(dims)
    out = []
    for beta, c in sorted(f.items(), key=lambda kv: (-sum(kv[0]), index_key(kv[0]))):
        mono = _monomial_str(beta, names)
        cs = coef_str(c, f.field)
        neg = cs.startswith("-")
        if neg:
            cs = cs[1:]
        if mono:
            term = mono if cs == "1" else f"{cs}*{mono}"
        else:
            term = cs
        if not out:
            out.append(("-" if neg else "") + term)
        else:
            out.append(("- " if neg else "+ ") + term)
    return " ".join(out)
