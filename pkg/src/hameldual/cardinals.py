"""Cardinal arithmetic under GCH, for dimensions of spaces and their duals.

Only finite cardinals and alephs with natural index occur.  With GCH,
2**aleph(k) == aleph(k+1), so ``c`` (the continuum) is aleph(1), ``c+`` is
aleph(2) and so on.
"""

import re
from dataclasses import dataclass
from functools import total_ordering

__all__ = [
    "Cardinal", "Finite", "Aleph", "ALEPH0", "C", "parse_cardinal",
    "card_max", "card_succ", "card_pow", "card_of_space", "dim_of_dual",
    "dim_from_card", "SpaceRow", "example_table",
]

_C_NAMES = {1: "c", 2: "c+", 3: "c++"}


@total_ordering
@dataclass(frozen=True)
class Cardinal:
    infinite: bool
    index: int          # n for Finite(n), k for Aleph(k)

    def __post_init__(self):
        if not isinstance(self.index, int) or self.index < 0:
            raise ValueError(f"cardinal index must be a natural number, got {self.index!r}")

    def __lt__(self, other):
        if not isinstance(other, Cardinal):
            return NotImplemented
        return (self.infinite, self.index) < (other.infinite, other.index)

    def __str__(self):
        if not self.infinite:
            return str(self.index)
        if self.index == 0:
            return "aleph0"
        return _C_NAMES.get(self.index, f"aleph({self.index})")

    def __repr__(self):
        kind = "Aleph" if self.infinite else "Finite"
        return f"{kind}({self.index})"


def Finite(n):
    return Cardinal(False, n)


def Aleph(k):
    return Cardinal(True, k)


ALEPH0 = Aleph(0)
C = Aleph(1)


def parse_cardinal(text):
    """Reads "7", "aleph0", "aleph(3)", "c", "c+", "c++", ... ."""
    t = str(text).strip().replace(" ", "").replace("ℵ", "aleph").replace("𝔠", "c")
    if re.fullmatch(r"\d+", t):
        return Finite(int(t))
    m = re.fullmatch(r"aleph\(?(\d+)\)?", t)
    if m:
        return Aleph(int(m.group(1)))
    m = re.fullmatch(r"c(\+*)", t)
    if m:
        return Aleph(1 + len(m.group(1)))
    raise ValueError(f"not a cardinal: {text!r}")


def card_max(a, b):
    return max(a, b)


def card_succ(a):
    if a.infinite:
        return Aleph(a.index + 1)
    return Finite(a.index + 1)


def card_pow(y, x):
    """y ** x; for infinite x this is max(y, x+) under GCH."""
    if not x.infinite:
        if x.index == 0:
            return Finite(1)
        if y.infinite:
            return y
        return Finite(y.index ** x.index)
    if not y.infinite and y.index <= 1:
        return y
    return max(y, card_succ(x))


def card_of_space(dimV, cardK):
    """card V for a space of dimension ``dimV`` over a field of size ``cardK``."""
    if dimV == Finite(0):
        return Finite(1)
    if not dimV.infinite and not cardK.infinite:
        return card_pow(cardK, dimV)
    return max(dimV, cardK)


def dim_of_dual(dimV, cardK):
    """dim V* = max((dim V)+, card K) for infinite dim V; dim V* = dim V otherwise."""
    if not dimV.infinite:
        return dimV
    return max(card_succ(dimV), cardK)


def dim_from_card(cardV, cardK, lower=None):
    """Recover dim V from card V.

    If card K < card V the dimension equals card V.  Otherwise a known lower
    bound is needed and must meet the trivial upper bound dim V <= card V.
    """
    if cardK < cardV and cardV.infinite:
        return cardV
    if lower is not None and lower == cardV:
        return cardV
    raise ValueError(f"dimension not determined by card {cardV} over a field of size {cardK}")


@dataclass(frozen=True)
class SpaceRow:
    name: str
    dim: Cardinal
    card: Cardinal

    def __str__(self):
        return f"{self.name:<12} dim {str(self.dim):<8} card {self.card}"


def _tower(name, dim, cardK, depth=2):
    base = f"({name})" if "|" in name else name
    rows = []
    for level in range(depth + 1):
        label = base + "*" * level if level else name
        rows.append(SpaceRow(label, dim, card_of_space(dim, cardK)))
        dim = dim_of_dual(dim, cardK)
    return rows


def _spaces():
    """The worked examples: (name, card K, dim V) with dim V derived where possible."""
    cardQ = ALEPH0
    cardR = card_pow(Finite(2), ALEPH0)      # 2^aleph0
    cardA = ALEPH0                            # algebraic numbers are countable
    countable_restrictions = card_pow(cardR, ALEPH0)   # restrictions to a countable dense set
    out = [
        ("R|Q", cardQ, dim_from_card(cardR, cardQ)),
        ("R|A", cardA, dim_from_card(cardR, cardA)),
        # R^N: card = c^aleph0, dim >= c from the free set of sequences (1/r^n)
        ("R^N", cardR, dim_from_card(card_pow(cardR, ALEPH0), cardR, lower=cardR)),
        ("C^N", cardR, dim_from_card(card_pow(cardR, ALEPH0), cardR, lower=cardR)),
        # monomials form a countable basis
        ("C[z]", cardR, ALEPH0),
        # translates of one test function are free: dim >= c
        ("D(Omega)", cardR, dim_from_card(countable_restrictions, cardR, lower=cardR)),
        ("E(Omega)", cardR, dim_from_card(countable_restrictions, cardR, lower=cardR)),
        # contains D(Omega), and has card at most c
        ("D'(Omega)", cardR, dim_from_card(countable_restrictions, cardR, lower=cardR)),
        # separable Hilbert space: a metric space containing a copy of D(R)
        ("H", cardR, dim_from_card(countable_restrictions, cardR, lower=cardR)),
    ]
    return out


def example_table():
    """Dimension and cardinality of each example space, its dual and double dual."""
    rows = []
    for name, cardK, dim in _spaces():
        rows.extend(_tower(name, dim, cardK))
    return rows
