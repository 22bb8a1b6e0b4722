"""Recursive-descent parser for differential operator text.

Grammar::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' nat)*
    atom   := rational | 'i' | var | deriv | '(' expr ')' | '-' factor
    var    := 'x' nat | 'x' | 'y' | 'z'
    deriv  := 'd' nat | 'd' var | 'd'

``x``, ``y``, ``z`` are x1, x2, x3 and a bare ``d`` is d1.  Products are
composed left to right and normal-ordered as they are built, so
``d1*x1`` parses to ``x1*d1 + 1``.
"""

import re
from fractions import Fraction

from .diffops import DiffOp
from .errors import MixedFields, OperatorSyntaxError, UnknownVariable
from .scalars import Q, QI, GaussianRational

__all__ = ["parse"]

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:\s*/\s*\d+)?)
  | (?P<deriv>d(?:\d+|x\d*|[yz])?)
  | (?P<var>x\d*|[yz])
  | (?P<imag>i)
  | (?P<op>[-+*^()])
""", re.VERBOSE)

_LETTER = {"x": 1, "y": 2, "z": 3}


def _var_index(name):
    if name[0] == "x" and len(name) > 1:
        return int(name[1:])
    return _LETTER[name]


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise OperatorSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            value = m.group()
            if kind == "deriv":
                rest = value[1:]
                if rest == "":
                    value = 1
                elif rest.isdigit():
                    value = int(rest)
                else:
                    value = _var_index(rest)
            elif kind == "var":
                value = _var_index(value)
            if kind in ("deriv", "var") and value < 1:
                raise UnknownVariable(f"variable index {value} at position {pos}")
            tokens.append((kind, value, pos))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens, dims, field):
        self.tokens = tokens
        self.i = 0
        self.dims = dims
        self.field = field

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, ch):
        kind, value, pos = self.take()
        if kind != "op" or value != ch:
            raise OperatorSyntaxError(f"expected {ch!r}", pos)

    def is_op(self, *chars):
        kind, value, _ = self.peek()
        return kind == "op" and value in chars

    def expr(self):
        sign = 1
        if self.is_op("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        result = self.term()
        if sign < 0:
            result = -result
        while self.is_op("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self):
        result = self.factor()
        while self.is_op("*"):
            self.take()
            result = result.compose(self.factor())
        return result

    def factor(self):
        base = self.atom()
        while self.is_op("^"):
            self.take()
            kind, value, pos = self.take()
            if kind != "num" or "/" in value:
                raise OperatorSyntaxError("exponent must be a natural number", pos)
            base = base ** int(value)
        return base

    def atom(self):
        kind, value, pos = self.take()
        dims, field = self.dims, self.field
        if kind == "num":
            try:
                c = Fraction(value.replace(" ", ""))
            except ZeroDivisionError:
                raise OperatorSyntaxError("zero denominator", pos) from None
            return DiffOp.scalar(c, dims, field)
        if kind == "imag":
            return DiffOp.scalar(GaussianRational(0, 1), dims, field)
        if kind == "var":
            return DiffOp.x(value, dims, field)
        if kind == "deriv":
            return DiffOp.d(value, dims, field)
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        if kind == "op" and value == "-":
            return -self.factor()
        if kind == "end":
            raise OperatorSyntaxError("unexpected end of input", pos)
        raise OperatorSyntaxError(f"unexpected {value!r}", pos)


def parse(text, dims=None, field=None):
    """Parse operator text into a normal-form :class:`DiffOp`.

    ``dims`` defaults to the largest variable index used (at least 1).
    ``field`` defaults to Q, or Q(i) when the text mentions ``i``.
    """
    tokens = _tokenize(text)
    used = [v for k, v, _ in tokens if k in ("var", "deriv")]
    top = max(used, default=1)
    if dims is None:
        dims = top
    elif top > dims:
        pos = next(p for k, v, p in tokens if k in ("var", "deriv") and v == top)
        raise UnknownVariable(f"variable {top} at position {pos} exceeds dims={dims}")
    has_i = any(k == "imag" for k, _, _ in tokens)
    if field is None:
        field = QI if has_i else Q
    elif has_i and field != QI:
        raise MixedFields(f"'i' used with field {field}")
    p = _Parser(tokens, dims, field)
    result = p.expr()
    kind, value, pos = p.peek()
    if kind != "end":
        raise OperatorSyntaxError(f"unexpected {value!r}", pos)
    return result
