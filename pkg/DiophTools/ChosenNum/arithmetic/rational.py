from fractions import Fraction
from numbers import Rational as _RationalABC
import math

from DiophTools.ChosenNum.errors import InvalidParameterError

"""
Exact rational scalars.

fractions.Fraction already keeps numerator and denominator in lowest terms
with a positive denominator, so it is used as the Rational type throughout.
Floats are refused.
"""

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


def to_rational(value):
    """
    @brief Converts an int, Fraction or "num/den" / decimal string into a Fraction.

    @param value int, Fraction or str ("3/4", "0.25", "1e-14").
    @return Fraction equal to value.
    @exception InvalidParameterError for floats, bools and unparsable strings.
    """
    if isinstance(value, bool):
        raise InvalidParameterError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidParameterError(f"not a rational: {value!r}") from e
    raise InvalidParameterError(f"not a rational: {value!r} (floats are not accepted)")


def format_rational(value):
    """
    @brief Renders a rational as "num/den", integers included ("1/1").
    """
    q = to_rational(value)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text):
    """Inverse of format_rational."""
    return to_rational(text)


def frac_part(q):
    """Fractional part {q} in [0, 1)."""
    return q - math.floor(q)


def circle_distance(x, y):
    """
    @brief Distance between x and y on the circle R/Z, in [0, 1/2].
    """
    t = frac_part(to_rational(x) - to_rational(y))
    return min(t, ONE - t)


def check_c(c):
    """
    @brief Validates the radius parameter c.

    @return c as a Fraction.
    @exception InvalidParameterError unless 0 < c <= 1/2.
    """
    c = to_rational(c)
    if not (ZERO < c <= HALF):
        raise InvalidParameterError("c must be in (0,1/2]")
    return c
