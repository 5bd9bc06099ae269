"""Normalized leading coefficients of the length function.

For fixed s with denominator a power of p, the determinantal length is a
polynomial in q of degree m + n - 1 (the dimension of the ring), so the
normalized limit h_s exists and equals the leading coefficient. The
polynomial is recovered by exact interpolation on sampled prime powers
and cross-checked on held-out samples. The s-multiplicity e_s divides
h_s by the regular-ring normalizer, which is the volume the simplex of
side s cuts from the unit cube of the matching dimension.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactmath import Polynomial, binom, interpolate
from .length import length_closed, regular_length

__all__ = [
    "normalizer",
    "fit_length_polynomial",
    "h_s_value",
    "e_s_value",
    "MultiplicityResult",
    "analyze",
    "nonpolynomial_demo",
]


def normalizer(s, d: int) -> Fraction:
    """Volume of the corner the simplex x_1 + ... + x_d <= s cuts from
    the unit d-cube: sum_{i <= floor(s)} (-1)^i / d! C(d, i) (s - i)^d.

    Equals s^d / d! for s <= 1 and saturates at 1 for s >= d.
    """
    s = Fraction(s)
    if s <= 0:
        raise ValueError("s must be positive")
    if d < 1:
        raise ValueError("dimension d must be >= 1")
    fact = math.factorial(d)
    total = Fraction(0)
    for i in range(math.floor(s) + 1):
        total += Fraction((-1) ** i * binom(d, i), fact) * (s - i) ** d
    return total


def _denominator_power_of_p(s: Fraction, p: int) -> int:
    """Exponent e with denominator(s) = p^e; raises if s has another prime."""
    den = s.denominator
    e = 0
    while den % p == 0:
        den //= p
        e += 1
    if den != 1:
        raise ValueError(
            f"denominator of s = {s} is not a power of p = {p}; "
            "the length function is not a single polynomial in q there"
        )
    return e


def fit_length_polynomial(m: int, n: int, s, p: int) -> Polynomial:
    """Exact polynomial in q agreeing with the closed-form length at all
    sampled powers q = p^e.

    Samples m + n + 2 consecutive exponents starting just past the first
    e making s * p^e integral, fits the first m + n points, and demands
    the two held-out samples land on the fit exactly. If they do not
    (late polynomial onset), the window shifts up once before giving up.
    """
    s = Fraction(s)
    if m < 1 or n < 1:
        raise ValueError("dimensions m and n must be >= 1")
    if s <= 0:
        raise ValueError("s must be positive")
    if p < 2:
        raise ValueError("p must be at least 2")
    e0 = _denominator_power_of_p(s, p)
    for start in (e0 + 1, e0 + 2):
        points = [
            (p ** e, length_closed(m, n, s, p ** e))
            for e in range(start, start + m + n + 2)
        ]
        poly = interpolate(points[: m + n])
        if all(poly(x) == y for x, y in points[m + n:]):
            return poly
    raise ArithmeticError(
        f"length samples for m={m}, n={n}, s={s}, p={p} never stabilized "
        "onto one polynomial"
    )


def h_s_value(m: int, n: int, s, p: int) -> Fraction:
    """Leading coefficient (degree m + n - 1) of the fitted length polynomial."""
    return fit_length_polynomial(m, n, s, p).coefficient(m + n - 1)


def e_s_value(m: int, n: int, s, p: int) -> Fraction:
    """h_s divided by the normalizer in dimension m + n - 1."""
    return h_s_value(m, n, s, p) / normalizer(s, m + n - 1)


@dataclass(frozen=True)
class MultiplicityResult:
    """Fitted polynomial plus the derived multiplicity data for one s."""

    s: Fraction
    fitted_polynomial: Polynomial
    h_s: Fraction
    normalizer: Fraction
    e_s: Fraction


def analyze(m: int, n: int, s, p: int) -> MultiplicityResult:
    """Fit the length polynomial and package h_s, the normalizer, and e_s."""
    s = Fraction(s)
    poly = fit_length_polynomial(m, n, s, p)
    h = poly.coefficient(m + n - 1)
    norm = normalizer(s, m + n - 1)
    return MultiplicityResult(
        s=s, fitted_polynomial=poly, h_s=h, normalizer=norm, e_s=h / norm
    )


def nonpolynomial_demo(p: int, s, e_max: int) -> dict:
    """Tabulate the two-variable regular-ring length at q = p^e for an s
    whose denominator is not a power of p.

    For p = 2, s = 4/3 the values are checked against the two known
    parity branches 7/9 q^2 + 5/9 q - 2/9 (e odd) and
    7/9 q^2 + 7/9 q - 5/9 (e even); for other (p, s) the raw values are
    reported without asserted branches.
    """
    s = Fraction(s)
    if p < 2:
        raise ValueError("p must be at least 2")
    if e_max < 1:
        raise ValueError("e_max must be >= 1")
    if s <= 0:
        raise ValueError("s must be positive")
    den = s.denominator
    while den % p == 0:
        den //= p
    if den == 1:
        raise ValueError(
            f"denominator of s = {s} is a power of p = {p}; the length is "
            "eventually polynomial there and this demonstration does not apply"
        )
    check_branches = p == 2 and s == Fraction(4, 3)
    rows = []
    all_match = True if check_branches else None
    for e in range(1, e_max + 1):
        q = p ** e
        r = math.ceil(s * q)
        value = regular_length(2, r, q)
        row = {"e": e, "q": q, "r": r, "length": value}
        if check_branches:
            if e % 2:
                expected = Fraction(7 * q * q + 5 * q - 2, 9)
            else:
                expected = Fraction(7 * q * q + 7 * q - 5, 9)
            row["branch"] = "odd" if e % 2 else "even"
            row["formula"] = int(expected)
            row["match"] = value == expected
            all_match = all_match and row["match"]
        rows.append(row)
    return {
        "p": p,
        "s": s,
        "dimension": 2,
        "rows": rows,
        "branch_formulas_checked": check_branches,
        "all_match": all_match,
    }
