"""The length of k[X]/(I2(X) + m^r + m^[q]) for a generic m x n matrix
of variables, by three mutually independent routes.

Route one is the closed form r_term - s_term, valid when the cutoff r is
s*q for an exact rational s with s*q an integer. Route two assembles the
same number as T(m,n,r,q) + T(n,m,r,q) - U(m,n,r,q) and works for any
integer cutoff r. Route three enumerates the staircase basis outright.
The regular-ring length (no minors) rounds out the module; it powers the
demonstration that the length need not be a single polynomial in q when
the denominator of s is not a power of the characteristic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .counting import bounded_compositions, t_closed, u_closed
from .exactmath import binom, monus
from .staircase import count_staircase_basis_naive

__all__ = [
    "r_term",
    "s_term",
    "length_closed",
    "length_tu",
    "length_oracle",
    "regular_length",
    "LengthQuery",
]


def r_term(m: int, n: int, sq: int) -> int:
    """The positive part of the closed form; depends on s and q only
    through the product sq.

    sum_{a,b,l} C(m-1, a) C(n-1, b) C(sq+l, a+b+1) C(a, l) C(b, l).
    """
    if m < 1 or n < 1:
        raise ValueError("dimensions m and n must be >= 1")
    total = 0
    for a in range(m):
        ca = binom(m - 1, a)
        for b in range(n):
            cb = binom(n - 1, b)
            for ell in range(min(a, b) + 1):
                total += (
                    ca * cb * binom(sq + ell, a + b + 1)
                    * binom(a, ell) * binom(b, ell)
                )
    return total


def s_term(m: int, n: int, sq: int, q: int) -> int:
    """The inclusion-exclusion correction of the closed form.

    Double alternating sum over i in [1, m], j in [1, n] with
    monus-shifted binomials; every term carries C(sq - max(i,j)q + l,
    a+b+1), so the whole sum vanishes once sq <= q.
    """
    if m < 1 or n < 1:
        raise ValueError("dimensions m and n must be >= 1")
    if q < 1:
        raise ValueError("q must be >= 1")
    total = 0
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            sign = -1 if (i + j) % 2 else 1
            cij = binom(m, i) * binom(n, j)
            shift = sq - max(i, j) * q
            for a in range(m):
                ca = binom(monus(j, i) * q + m - 1, m - 1 - a)
                for b in range(n):
                    cb = binom(monus(i, j) * q + n - 1, n - 1 - b)
                    for ell in range(min(a, b) + 1):
                        total += (
                            sign * cij * ca * cb
                            * binom(shift + ell, a + b + 1)
                            * binom(a, ell) * binom(b, ell)
                        )
    return total


def length_closed(m: int, n: int, s, q: int) -> int:
    """Length via the closed form r_term - s_term; requires s*q integral."""
    s = Fraction(s)
    if s <= 0:
        raise ValueError("s must be positive")
    if q < 1:
        raise ValueError("q must be >= 1")
    sq = s * q
    if sq.denominator != 1:
        raise ValueError(
            f"s*q = {sq} is not an integer; use length_tu with r = ceil(s*q) = {math.ceil(sq)}"
        )
    sq = int(sq)
    return r_term(m, n, sq) - s_term(m, n, sq, q)


def length_tu(m: int, n: int, r: int, q: int) -> int:
    """Length via T(m,n,r,q) + T(n,m,r,q) - U(m,n,r,q); any integer cutoff r."""
    return t_closed(m, n, r, q) + t_closed(n, m, r, q) - u_closed(m, n, r, q)


def length_oracle(m: int, n: int, r: int, q: int) -> int:
    """Length by naive enumeration of the staircase basis profiles.

    Test-only ground truth; shares nothing with the binomial formulas.
    """
    return count_staircase_basis_naive(m, n, r, q)


def regular_length(d: int, r: int, q: int) -> int:
    """Length of a d-variable polynomial ring modulo m^r + m^[q]:
    the number of monomials of degree < r with every exponent < q."""
    if d < 1:
        raise ValueError("dimension d must be >= 1")
    if r < 0:
        raise ValueError("degree bound r must be >= 0")
    if q < 1:
        raise ValueError("q must be >= 1")
    return sum(bounded_compositions(d, e, q) for e in range(r))


def _is_power_of(q: int, p: int) -> bool:
    while q % p == 0:
        q //= p
    return q == 1


@dataclass(frozen=True)
class LengthQuery:
    """One length evaluation: dimensions, exact cutoff ratio s, and q.

    When the characteristic p is supplied, q must be a power of p; the
    combinatorics itself only needs q >= 1.
    """

    m: int
    n: int
    s: Fraction
    q: int
    p: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "s", Fraction(self.s))
        if self.m < 1 or self.n < 1:
            raise ValueError("dimensions m and n must be >= 1")
        if self.s <= 0:
            raise ValueError("s must be positive")
        if self.q < 1:
            raise ValueError("q must be >= 1")
        if self.p is not None:
            if self.p < 2:
                raise ValueError("p must be at least 2")
            if not _is_power_of(self.q, self.p):
                raise ValueError(f"q = {self.q} is not a power of p = {self.p}")

    @property
    def r(self) -> int:
        """Degree cutoff ceil(s*q), computed exactly."""
        return math.ceil(self.s * self.q)

    def evaluate(self, route: str = "closed") -> int:
        if route == "closed":
            return length_closed(self.m, self.n, self.s, self.q)
        if route == "tu":
            return length_tu(self.m, self.n, self.r, self.q)
        if route == "oracle":
            return length_oracle(self.m, self.n, self.r, self.q)
        raise ValueError(f"unknown route {route!r}; expected closed, tu, or oracle")
