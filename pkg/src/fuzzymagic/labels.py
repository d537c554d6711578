"""Exact membership values and their text representations.

Every membership value in this library is a `fractions.Fraction` in [0, 1],
kept in lowest terms by the Fraction type itself.  Nothing here ever touches
binary floating point: parsing, formatting and percentage rendering all work
in integer arithmetic so boundary cases (a magic constant of exactly 1, a
unit of 1/15) compare exactly.
"""

from __future__ import annotations

from fractions import Fraction

Label = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class LabelOutOfRange(ValueError):
    """A membership value fell outside [0, 1]."""

    def __init__(self, value, holder=None):
        self.value = Fraction(value)
        self.holder = holder
        where = f" at {holder}" if holder is not None else ""
        super().__init__(f"label {self.value} outside [0, 1]{where}")


def as_label(value, holder=None) -> Fraction:
    """Coerce to an exact Fraction in [0, 1], or raise LabelOutOfRange.

    Accepts Fraction, int, or a string in either decimal ("0.13") or
    rational ("5/15") form.  Floats are rejected: a float argument almost
    always means an inexact value sneaked in upstream.
    """
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}; pass a Fraction or string")
    f = value if type(value) is Fraction else Fraction(value)
    # Fraction keeps the denominator positive, so the range check is two
    # integer comparisons (this sits on the hot path of every build)
    if f.numerator < 0 or f.numerator > f.denominator:
        raise LabelOutOfRange(f, holder)
    return f


def parse_label(text: str, holder=None) -> Fraction:
    """Parse a decimal ("0.13") or rational ("p/q") string exactly."""
    f = Fraction(text.strip())
    if f < 0 or f > 1:
        raise LabelOutOfRange(f, holder)
    return f


def _decimal_exponent(q: int):
    """Smallest k with q | 10**k, or None if q has a prime factor other
    than 2 or 5 (no finite decimal form)."""
    twos = fives = 0
    while q % 2 == 0:
        q //= 2
        twos += 1
    while q % 5 == 0:
        q //= 5
        fives += 1
    return max(twos, fives) if q == 1 else None


def format_label(value: Fraction) -> str:
    """Render a rational as a finite decimal when possible, else "p/q".

    Finite decimals keep serialized graphs readable (0.13); denominators
    like 15 fall back to the exact rational form (7/15).
    """
    value = Fraction(value)
    k = _decimal_exponent(value.denominator)
    if k is None:
        return f"{value.numerator}/{value.denominator}"
    if k == 0:
        return str(value.numerator)
    scaled = abs(value.numerator) * 10**k // value.denominator
    digits = str(scaled).rjust(k + 1, "0")
    sign = "-" if value.numerator < 0 else ""
    return f"{sign}{digits[:-k]}.{digits[-k:]}"


def format_percent(value: Fraction) -> str:
    """Render as a percentage with at most 2 decimals, round half up.

    All in integer arithmetic: scale by 10^4, round half up, then strip
    trailing zero cents ("40%" rather than "40.00%").
    """
    value = Fraction(value)
    scaled = value * 10_000  # hundredths of a percent
    n = (2 * scaled.numerator + scaled.denominator) // (2 * scaled.denominator)
    whole, cents = divmod(n, 100)
    if cents == 0:
        return f"{whole}%"
    text = f"{whole}.{cents:02d}".rstrip("0")
    return f"{text}%"
