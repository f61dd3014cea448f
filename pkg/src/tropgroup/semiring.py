"""Exact max-plus scalars.

A scalar is either the distinguished ``NEG_INF`` or a ``fractions.Fraction``.
Fractions are always stored reduced, so equality is exact and canonical.
"""

import re
from fractions import Fraction
from typing import Union

from .errors import ParseError


class NegInf:
    """The tropical zero. Compares strictly below every rational."""

    _instance: "NegInf | None" = None

    def __new__(cls) -> "NegInf":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NEG_INF"

    def __str__(self) -> str:
        return "-inf"

    def __hash__(self) -> int:
        return hash("tropgroup.NEG_INF")

    def __eq__(self, other: object) -> bool:
        return other is self

    def __lt__(self, other: object) -> bool:
        if other is self:
            return False
        if isinstance(other, Fraction | int):
            return True
        return NotImplemented

    def __le__(self, other: object) -> bool:
        if other is self or isinstance(other, Fraction | int):
            return True
        return NotImplemented

    def __gt__(self, other: object) -> bool:
        if other is self or isinstance(other, Fraction | int):
            return False
        return NotImplemented

    def __ge__(self, other: object) -> bool:
        if other is self:
            return True
        if isinstance(other, Fraction | int):
            return False
        return NotImplemented

    def __reduce__(self):
        return (NegInf, ())


NEG_INF = NegInf()

Scalar = Union[Fraction, NegInf]

ZERO = Fraction(0)

_RATIONAL_RE = re.compile(r"-?[0-9]+(?:/[0-9]+)?")


def scalar(value: "Scalar | int | str") -> Scalar:
    """Coerce an int, Fraction, NEG_INF or entry text into a Scalar."""
    if value is NEG_INF:
        return NEG_INF
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise ParseError(f"not a tropical scalar: {value!r}", witnesses={"value": repr(value)})


def parse_scalar(text: str) -> Scalar:
    """Parse ``"-inf"``, ``"3"`` or ``"-5/2"``. No floats, no whitespace."""
    if text == "-inf":
        return NEG_INF
    if not _RATIONAL_RE.fullmatch(text):
        raise ParseError(f"bad entry {text!r}: expected \"-inf\" or p/q", witnesses={"entry": text})
    if "/" in text and int(text.split("/", 1)[1]) == 0:
        raise ParseError(f"bad entry {text!r}: zero denominator", witnesses={"entry": text})
    return Fraction(text)


def format_scalar(a: Scalar) -> str:
    """Canonical entry text; ``parse_scalar(format_scalar(a)) == a``."""
    return "-inf" if a is NEG_INF else str(a)


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    """Tropical sum: max, with NEG_INF neutral."""
    if a is NEG_INF:
        return b
    if b is NEG_INF:
        return a
    return a if a >= b else b


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    """Tropical product: rational sum, with NEG_INF absorbing."""
    if a is NEG_INF or b is NEG_INF:
        return NEG_INF
    return a + b


def residual(b: Scalar, r: Fraction) -> Scalar:
    """Largest x with ``x ⊗ r <= b`` for finite r."""
    if b is NEG_INF:
        return NEG_INF
    return b - r
