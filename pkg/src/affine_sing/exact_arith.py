"""Exact scalars.

Python's ``int`` already is an arbitrary precision integer with a canonical
zero, and :class:`fractions.Fraction` keeps numerator/denominator reduced with
a positive denominator, so both are used directly as the scalar field of the
whole package.  This module adds the textual ``p/q`` syntax and a thin
operation dispatcher.
"""

from __future__ import annotations

import re
from fractions import Fraction

Integer = int
Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class DivisionByZeroError(ZeroDivisionError):
    """Raised when dividing by, or inverting, an exact zero."""


class RationalSyntaxError(ValueError):
    pass


_RATIONAL_RE = re.compile(r"\s*([+-]?)\s*(\d+)\s*(?:/\s*(\d+))?\s*$")


def Q(value, den=None) -> Fraction:
    """Coerce ``value`` (int, Fraction or "p/q" text) to a normalized rational."""
    if den is not None:
        if den == 0:
            raise DivisionByZeroError("zero denominator")
        return Fraction(value, den)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot make an exact rational from {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if not m:
        raise RationalSyntaxError(f"not a rational: {text!r}")
    sign, num, den = m.groups()
    if den is not None and int(den) == 0:
        raise DivisionByZeroError(f"zero denominator in {text!r}")
    value = Fraction(int(num), int(den) if den else 1)
    return -value if sign == "-" else value


def render_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def normalize(num: int, den: int) -> Fraction:
    if den == 0:
        raise DivisionByZeroError("zero denominator")
    return Fraction(num, den)


def rational_arith(a: Fraction, b: Fraction | None, op: str):
    """Apply ``op`` in {add, sub, mul, div, neg, inv, cmp}.

    ``neg`` and ``inv`` ignore ``b``.  ``cmp`` returns -1, 0 or 1.
    """
    a = Q(a)
    if op == "neg":
        return -a
    if op == "inv":
        if a == 0:
            raise DivisionByZeroError("inverse of zero")
        return 1 / a
    b = Q(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise DivisionByZeroError("division by zero")
        return a / b
    if op == "cmp":
        return (a > b) - (a < b)
    raise ValueError(f"unknown operation {op!r}")


def is_integer(x: Fraction) -> bool:
    return Fraction(x).denominator == 1
