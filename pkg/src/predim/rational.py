"""Exact rational coefficients.

All pre-dimension values, densities, probabilities and LP arithmetic are
plain `fractions.Fraction`: always in lowest terms, positive denominator,
arbitrary-precision integers.  This module only adds parsing/formatting for
the "P/Q" notation used in files and on the command line.
"""

from fractions import Fraction

from .errors import InputError


def parse_fraction(text):
    """Parse "P/Q" or "P" into a Fraction. Rejects floats and zero denominators."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise InputError(f"expected a rational like '2/1', got {text!r}")
    s = text.strip()
    try:
        if "/" in s:
            num, den = s.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a valid rational: {text!r}") from exc


def fraction_str(value):
    """Render a Fraction as "P/Q" ("P" when the denominator is 1)."""
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"
