"""Scalar arithmetic for the Boolean and max-plus-over-Q idempotent semifields.

Both semifields share one carrier: a finite element is an exact ``Fraction``
(the group part, written additively), and the bottom element is the sentinel
``ZERO``.  The Boolean semifield is the sub-semifield ``{ZERO, ONE}`` where
``ONE == Fraction(0)``, so the same operations serve both kinds.  ``TOP`` is
only used by the residuated extension.
"""

from __future__ import annotations

import enum
import re
from fractions import Fraction
from functools import total_ordering


class Kind(enum.Enum):
    BOOLEAN = "bool"
    MAXPLUS = "maxplus"

    @classmethod
    def parse(cls, text: str) -> "Kind":
        aliases = {
            "bool": cls.BOOLEAN,
            "boolean": cls.BOOLEAN,
            "b": cls.BOOLEAN,
            "maxplus": cls.MAXPLUS,
            "max-plus": cls.MAXPLUS,
            "qmax": cls.MAXPLUS,
            "tropical": cls.MAXPLUS,
        }
        try:
            return aliases[text.strip().lower()]
        except KeyError:
            raise ValueError(f"unknown semifield kind {text!r}") from None


class NoInverse(ArithmeticError):
    """Raised when inverting the zero element."""


class KindMismatch(ValueError):
    """Raised when values or matrices of different kinds are combined."""


@total_ordering
class _Extreme:
    """Bottom or top sentinel, comparable with Fractions."""

    __slots__ = ("_sign", "_name")

    def __init__(self, sign: int, name: str):
        self._sign = sign
        self._name = name

    def __eq__(self, other):
        return self is other

    def __hash__(self):
        return hash(self._name)

    def __lt__(self, other):
        if other is self:
            return False
        return self._sign < 0

    def __gt__(self, other):
        if other is self:
            return False
        return self._sign > 0

    def __repr__(self):
        return self._name

    def __reduce__(self):
        return self._name


ZERO = _Extreme(-1, "ZERO")
TOP = _Extreme(+1, "TOP")
ONE = Fraction(0)


def is_finite(a) -> bool:
    return a is not ZERO and a is not TOP


def add(a, b):
    """Semiring sum: the maximum."""
    return a if a >= b else b


def meet(a, b):
    """Greatest lower bound: the minimum."""
    return a if a <= b else b


def mul(a, b):
    if a is ZERO or b is ZERO:
        return ZERO
    if a is TOP or b is TOP:
        return TOP
    return a + b


def inv(a):
    if a is ZERO:
        raise NoInverse("zero has no inverse")
    if a is TOP:
        raise NoInverse("top has no inverse")
    return -a


def div(b, a):
    """b * a^-1 for finite a."""
    return mul(b, inv(a))


def power(a, k: int):
    if k == 0:
        return ONE
    if a is ZERO:
        return ZERO
    return a * k


def residual(a, b):
    """Largest x in the top-extended semiring with a*x <= b."""
    if a is ZERO or (a is TOP and b is TOP):
        return TOP
    if a is TOP:
        return ZERO
    if b is TOP:
        return TOP
    if b is ZERO:
        return ZERO
    return b - a


def sum_of(values):
    out = ZERO
    for v in values:
        if v > out:
            out = v
    return out


def meet_of(values):
    out = TOP
    for v in values:
        if v < out:
            out = v
    return out


def belongs(a, kind: Kind, extended: bool = False) -> bool:
    if a is ZERO:
        return True
    if a is TOP:
        return extended
    if not isinstance(a, Fraction):
        return False
    return kind is Kind.MAXPLUS or a == ONE


def coerce(a, kind: Kind, extended: bool = False):
    """Turn ints/Fractions into carrier values and check kind membership."""
    if isinstance(a, int) and not isinstance(a, bool):
        a = Fraction(a)
    if not belongs(a, kind, extended):
        raise KindMismatch(f"{a!r} is not an element of the {kind.value} semifield")
    return a


_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_value(token: str, kind: Kind, extended: bool = False):
    """Parse a value token: ``-inf``, ``+top``, ``p/q``, ``p``; Boolean uses ``0``/``1``."""
    tok = token.strip()
    low = tok.lower()
    if low == "-inf":
        return ZERO
    if low in ("+top", "top"):
        if not extended:
            raise ValueError("top is only allowed in residual matrices")
        return TOP
    if kind is Kind.BOOLEAN:
        if tok == "0":
            return ZERO
        if tok == "1":
            return ONE
        raise ValueError(f"bad Boolean token {token!r}")
    if not _RATIONAL.match(tok):
        raise ValueError(f"bad rational token {token!r}")
    try:
        return Fraction(tok)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {token!r}") from None


def format_value(a, kind: Kind) -> str:
    if a is ZERO:
        return "0" if kind is Kind.BOOLEAN else "-inf"
    if a is TOP:
        return "+top"
    if kind is Kind.BOOLEAN:
        return "1"
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"
