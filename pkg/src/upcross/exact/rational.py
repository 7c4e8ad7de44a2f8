"""The "p/q" wire form of exact rationals."""

import re
from fractions import Fraction
from typing import Union

from upcross.errors import UpcrossError

Rational = Fraction

_RATIONAL_PATTERN = re.compile(r'^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$')


class RationalFormatError(UpcrossError):
    """Raised when a string is not an integer or a "p/q" fraction."""
    pass


def parse_rational(text: Union[str, int, Fraction]) -> Fraction:
    """
    Parse an exact rational from its wire form.

    Floats are refused: a JSON number like 0.1 has already lost exactness
    by the time it reaches us.

    Examples:
        "3/2" -> Fraction(3, 2)
        "-4"  -> Fraction(-4, 1)
        "6/4" -> Fraction(3, 2)
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise RationalFormatError(f"Not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise RationalFormatError(f"Rationals must be strings, got {type(text).__name__}: {text!r}")

    match = _RATIONAL_PATTERN.match(text)
    if match is None:
        raise RationalFormatError(f"Not a rational: {text!r}")

    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise RationalFormatError(f"Zero denominator: {text!r}")
    return Fraction(numerator, denominator)


def format_rational(value: Union[Fraction, int]) -> str:
    """Canonical wire form: "p/q" in lowest terms, or "p" when q = 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_pair(text: str) -> tuple[Fraction, Fraction]:
    """Parse "X,Y" into two rationals (used for --band, --query, --apex)."""
    parts = text.split(',')
    if len(parts) != 2:
        raise RationalFormatError(f"Expected two comma-separated rationals, got {text!r}")
    return parse_rational(parts[0]), parse_rational(parts[1])
