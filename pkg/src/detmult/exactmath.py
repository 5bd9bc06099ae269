"""Exact arithmetic: truncated binomials, truncated subtraction, and
univariate polynomials over the rationals.

Everything in this package is exact. Integers are Python ints, rationals
are fractions.Fraction, and no floating point appears anywhere.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "binom",
    "monus",
    "Polynomial",
    "interpolate",
    "format_fraction",
    "parse_fraction",
]


@lru_cache(maxsize=None)
def binom(m: int, n: int) -> int:
    """C(m, n), with the truncating convention C(m, n) = 0 if n < 0, m < n, or m < 0.

    The convention is load-bearing: the counting formulas in this package
    run their sums over wide index ranges and rely on out-of-range
    binomials vanishing rather than continuing to the generalized values.
    """
    if n < 0 or m < n or m < 0:
        return 0
    return math.comb(m, n)


def monus(a: int, b: int) -> int:
    """Truncated subtraction max(a - b, 0)."""
    return a - b if a > b else 0


_FRACTION_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_fraction(text: str) -> Fraction:
    """Parse 'num/den' or a bare integer string.

    Decimal notation is rejected on purpose; callers hand over exact
    rationals or nothing.
    """
    match = _FRACTION_RE.match(text.strip())
    if not match:
        raise ValueError(f"not a num/den rational: {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_fraction(value) -> str:
    """Render a rational as 'num/den', denominator always present."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


class Polynomial:
    """Polynomial in one variable q with Fraction coefficients.

    Coefficients are stored lowest degree first with trailing zeros
    stripped, so the leading coefficient is nonzero unless the polynomial
    is zero (empty coefficient tuple, degree -1).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        """Coefficient of q^k; zero beyond the degree."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                term = str(mag)
            else:
                var = "q" if k == 1 else f"q^{k}"
                term = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def to_json_dict(self) -> dict:
        """Serialize as {"coeffs": ["num/den", ...]}, lowest degree first."""
        return {"coeffs": [format_fraction(c) for c in self.coeffs]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Polynomial":
        return cls(parse_fraction(c) for c in data["coeffs"])


def interpolate(points) -> Polynomial:
    """Unique polynomial of degree < len(points) through the given points.

    Newton divided differences over Fraction; abscissas must be pairwise
    distinct. Ordinates may be ints or Fractions.
    """
    points = list(points)
    if not points:
        raise ValueError("at least one interpolation point is required")
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate abscissa in interpolation points")
    n = len(points)
    dd = [Fraction(y) for _, y in points]
    newton = [dd[0]]
    for j in range(1, n):
        for i in range(n - j):
            dd[i] = (dd[i + 1] - dd[i]) / (xs[i + j] - xs[i])
        newton.append(dd[0])
    # Horner expansion of sum_j newton[j] * prod_{k<j} (x - xs[k])
    coeffs = [newton[-1]]
    for j in range(n - 2, -1, -1):
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for k, ck in enumerate(coeffs):
            nxt[k] -= xs[j] * ck
            nxt[k + 1] += ck
        nxt[0] += newton[j]
        coeffs = nxt
    return Polynomial(coeffs)
