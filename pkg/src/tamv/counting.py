"""Closed-form counts, evaluated exactly with integer arithmetic."""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial


def _exact(value: Fraction) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"formula value {value} is not an integer")
    return value.numerator


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return _exact(Fraction(comb(2 * n + 1, n), 2 * n + 1))


def fuss_catalan(m: int, n: int) -> int:
    """Number of m-ballot paths of height n."""
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    return _exact(Fraction(comb((m + 1) * n, n), m * n + 1))


def alternants_dimension_as_printed(m: int, n: int) -> Fraction:
    """``binom((m+1)n+1, mn) / ((m+1)n+1)`` exactly as usually quoted.

    It coincides with :func:`fuss_catalan` for m = 1 only; for instance it is
    3/2 at (m, n) = (2, 1). Kept to document the mismatch, never used as a count.
    """
    k = (m + 1) * n + 1
    return Fraction(comb(k, m * n), k)


def tamari_intervals_formula(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    return _exact(Fraction(2 * comb(4 * n + 1, n - 1), n * (n + 1)))


def m_tamari_intervals_formula(m: int, n: int) -> int:
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 and n >= 1")
    return _exact(Fraction((m + 1) * comb((m + 1) ** 2 * n + m, n - 1), n * (m * n + 1)))


def labelled_intervals_formula(m: int, n: int) -> int:
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 and n >= 1")
    return _exact((m + 1) ** n * Fraction(m * n + 1) ** (n - 2))


def total_intervals_formula(n: int) -> int:
    """Total number of intervals over all Tam(v) with ``|v| = n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _exact(Fraction(2 * factorial(3 * n + 3), factorial(n + 2) * factorial(2 * n + 3)))
