"""Exact scalar fields: the rationals, the Gaussian rationals Q(i), and GF(p).

Rationals are plain :class:`fractions.Fraction` values.  Gaussian rationals
and prime-field residues get small value classes below.  A :class:`Field`
object acts as the field tag carried by vectors and functionals: it coerces
Python numbers into the field, parses and prints scalar strings, and supplies
the conjugation used by the inner product.
"""

import re
from fractions import Fraction

from .errors import MixedFields

__all__ = [
    "Field", "Q", "QI", "GF", "field_from_name",
    "GaussianRational", "Mod", "is_prime", "I",
]


def is_prime(n):
    """Deterministic Miller-Rabin, exact for every n < 3.3 * 10**24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not a rational: {x!r}")


class GaussianRational:
    """An element ``re + im*i`` of Q(i), both parts exact fractions."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _lift(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other, 0)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return self * GaussianRational(o.re / n, -o.im / n)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (GaussianRational(1) / self) ** -n
        result = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        return _format_gaussian(self)


I = GaussianRational(0, 1)


class Mod:
    """A residue modulo the prime ``p``."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "value", value % p)

    def __setattr__(self, name, value):
        raise AttributeError("Mod is immutable")

    def _lift(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise MixedFields(f"GF({self.p}) and GF({other.p}) do not mix")
            return other
        if isinstance(other, int):
            return Mod(other, self.p)
        if isinstance(other, Fraction):
            return Mod(other.numerator, self.p) / Mod(other.denominator, self.p)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Mod(self.value + o.value, self.p)

    __radd__ = __add__

    def __neg__(self):
        return Mod(-self.value, self.p)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Mod(self.value - o.value, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Mod(self.value * o.value, self.p)

    __rmul__ = __mul__

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return Mod(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** -n
        return Mod(pow(self.value, n, self.p), self.p)

    def conjugate(self):
        return self

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                return False
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Mod({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


_RATIONAL = r"[+-]?\d+(?:/\d+)?"
_GAUSS_RE = re.compile(
    rf"^\s*(?:(?P<re>{_RATIONAL})(?=[+-]|$))?"
    rf"(?:(?P<im>[+-]?(?:\d+(?:/\d+)?)?)i)?\s*$"
)


def _format_rational(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _format_gaussian(z):
    im = z.im
    sign = "-" if im < 0 else "+"
    return f"{_format_rational(z.re)}{sign}{_format_rational(abs(im))}i"


def _parse_rational(text):
    text = text.strip()
    if not re.fullmatch(_RATIONAL, text):
        raise ValueError(f"not a rational scalar: {text!r}")
    return Fraction(text)


class Field:
    """Field tag.  Use the module constants ``Q``, ``QI`` or ``GF(p)``."""

    __slots__ = ("name", "modulus")

    def __init__(self, name, modulus=None):
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "modulus", modulus)

    def __setattr__(self, name, value):
        raise AttributeError("Field is immutable")

    def __eq__(self, other):
        return (isinstance(other, Field) and self.name == other.name
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.name, self.modulus))

    def __repr__(self):
        return self.name

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    @property
    def characteristic(self):
        return self.modulus or 0

    def __call__(self, x):
        """Coerce ``x`` into this field, refusing lossy conversions."""
        if self.modulus is not None:
            if isinstance(x, Mod):
                if x.p != self.modulus:
                    raise MixedFields(f"GF({x.p}) value in {self.name}")
                return x
            if isinstance(x, bool):
                x = int(x)
            if isinstance(x, int):
                return Mod(x, self.modulus)
            if isinstance(x, Fraction):
                if x.denominator % self.modulus == 0:
                    raise ZeroDivisionError(f"{x} has no image in {self.name}")
                return Mod(x.numerator, self.modulus) / x.denominator
            raise MixedFields(f"cannot coerce {x!r} into {self.name}")
        if self.name == "Qi":
            if isinstance(x, GaussianRational):
                return x
            if isinstance(x, (int, Fraction)):
                return GaussianRational(x, 0)
            raise MixedFields(f"cannot coerce {x!r} into Qi")
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, GaussianRational) and x.im == 0:
            return x.re
        raise MixedFields(f"cannot coerce {x!r} into Q")

    def contains(self, x):
        if self.modulus is not None:
            return isinstance(x, Mod) and x.p == self.modulus
        if self.name == "Qi":
            return isinstance(x, GaussianRational)
        return isinstance(x, Fraction)

    def conj(self, x):
        # identity on Q and GF(p); complex conjugation on Q(i)
        if self.name == "Qi":
            return x.conjugate()
        return x

    def parse(self, text):
        text = str(text).strip()
        if self.name == "Qi":
            m = _GAUSS_RE.match(text)
            if not m or (m.group("re") is None and m.group("im") is None):
                raise ValueError(f"not a Gaussian rational: {text!r}")
            re_part = Fraction(m.group("re")) if m.group("re") else Fraction(0)
            im_text = m.group("im")
            if im_text is None:
                im_part = Fraction(0)
            elif im_text in ("", "+"):
                im_part = Fraction(1)
            elif im_text == "-":
                im_part = Fraction(-1)
            else:
                im_part = Fraction(im_text)
            return GaussianRational(re_part, im_part)
        return self(_parse_rational(text))

    def format(self, x):
        x = self(x)
        if self.name == "Qi":
            return _format_gaussian(x)
        if self.modulus is not None:
            return str(x.value)
        return _format_rational(x)


Q = Field("Q")
QI = Field("Qi")
_GF_CACHE = {}


def GF(p):
    """The prime field of order ``p`` (primality checked)."""
    if p not in _GF_CACHE:
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"GF(p) needs a prime modulus, got {p!r}")
        _GF_CACHE[p] = Field(f"GF({p})", p)
    return _GF_CACHE[p]


def field_from_name(name):
    """Accepts ``Q``, ``Qi``, ``GF(p)`` and the CLI spelling ``GF:p``."""
    name = name.strip()
    if name == "Q":
        return Q
    if name in ("Qi", "QI", "Q(i)"):
        return QI
    m = re.fullmatch(r"GF[:(](\d+)\)?", name)
    if m:
        return GF(int(m.group(1)))
    raise ValueError(f"unknown field {name!r}")
