"""Tuple counting with equal-sum and bounded-part constraints.

T(m, n, r, q) counts tuples (x_1..x_m, y_1..y_n) of nonnegative integers
with sum(x) = sum(y) < r and every x_i < q; U(m, n, r, q) additionally
requires every y_j < q. These counts drive the determinantal length
function. Each has a closed form (an alternating sum of binomial
products) and an independent dynamic-programming oracle built from
bounded-composition counts; a deliberately naive tuple lister sits
behind hard size caps as the ground truth of last resort.
"""

from __future__ import annotations

from .exactmath import binom, monus

__all__ = [
    "bounded_compositions",
    "bounded_compositions_oracle",
    "iter_compositions",
    "t_closed",
    "u_closed",
    "t_oracle",
    "u_oracle",
    "t_bruteforce",
    "u_bruteforce",
]


def _check_bounded_args(v, d, q):
    if v < 1:
        raise ValueError("number of parts v must be >= 1")
    if d < 0:
        raise ValueError("total d must be >= 0")
    if q < 1:
        raise ValueError("part bound q must be >= 1")


def _check_tu_args(m, n, r, q):
    if m < 1 or n < 1:
        raise ValueError("dimensions m and n must be >= 1")
    if r < 0:
        raise ValueError("degree bound r must be >= 0")
    if q < 1:
        raise ValueError("part bound q must be >= 1")


def bounded_compositions(v: int, d: int, q: int) -> int:
    """Number of (z_1..z_v) in Z_{>=0}^v with sum = d and every z_i < q.

    Inclusion-exclusion over the parts that overflow:
    sum_i (-1)^i C(v, i) C(d - i*q + v - 1, v - 1).
    """
    _check_bounded_args(v, d, q)
    return sum(
        (-1) ** i * binom(v, i) * binom(d - i * q + v - 1, v - 1)
        for i in range(v + 1)
    )


def bounded_compositions_oracle(v: int, d: int, q: int) -> int:
    """Same count as bounded_compositions, by dynamic programming.

    N(k, t) = sum_{z=0}^{min(t, q-1)} N(k-1, t-z) with N(0, t) = [t == 0].
    """
    _check_bounded_args(v, d, q)
    row = [1] + [0] * d
    for _ in range(v):
        new = [0] * (d + 1)
        for t in range(d + 1):
            new[t] = sum(row[t - z] for z in range(min(t, q - 1) + 1))
        row = new
    return row[d]


def iter_compositions(total: int, parts: int):
    """Yield every tuple of `parts` nonnegative integers summing to `total`."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in iter_compositions(total - head, parts - 1):
            yield (head,) + tail


def t_closed(m: int, n: int, r: int, q: int) -> int:
    """Closed form for T(m, n, r, q)."""
    _check_tu_args(m, n, r, q)
    total = 0
    for i in range(m + 1):
        sign = -1 if i % 2 else 1
        ci = binom(m, i)
        for a in range(m):
            ca = binom(m - 1, m - 1 - a)
            for b in range(n):
                cb = binom(i * q + n - 1, n - 1 - b)
                if cb == 0:
                    continue
                for j in range(min(a, b) + 1):
                    total += (
                        sign * ci * ca * cb
                        * binom(r - i * q + j, a + b + 1)
                        * binom(a, j) * binom(b, j)
                    )
    return total


def u_closed(m: int, n: int, r: int, q: int) -> int:
    """Closed form for U(m, n, r, q).

    The monus shifts keep the row-side and column-side binomials
    nonnegative; terms beyond max(i, j)*q > r die through the truncating
    binomial convention.
    """
    _check_tu_args(m, n, r, q)
    total = 0
    for i in range(m + 1):
        for j in range(n + 1):
            sign = -1 if (i + j) % 2 else 1
            cij = binom(m, i) * binom(n, j)
            shift = r - max(i, j) * q
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


def t_oracle(m: int, n: int, r: int, q: int) -> int:
    """T(m, n, r, q) by summing DP composition counts over the degree d."""
    _check_tu_args(m, n, r, q)
    return sum(
        bounded_compositions_oracle(m, d, q) * binom(d + n - 1, n - 1)
        for d in range(r)
    )


def u_oracle(m: int, n: int, r: int, q: int) -> int:
    """U(m, n, r, q) by summing DP composition counts over the degree d."""
    _check_tu_args(m, n, r, q)
    return sum(
        bounded_compositions_oracle(m, d, q) * bounded_compositions_oracle(n, d, q)
        for d in range(r)
    )


_BRUTE_CAP_PARTS = 5
_BRUTE_CAP_R = 10


def _check_brute_cap(m, n, r):
    if m + n > _BRUTE_CAP_PARTS or r > _BRUTE_CAP_R:
        raise ValueError(
            f"brute-force listers are capped at m + n <= {_BRUTE_CAP_PARTS} "
            f"and r <= {_BRUTE_CAP_R}; use the oracle or closed form instead"
        )


def t_bruteforce(m: int, n: int, r: int, q: int) -> int:
    """T by literal tuple enumeration; test-only ground truth.

    Shares no machinery with the closed form or the DP, which is the
    point. Hard caps keep it honest about its scale.
    """
    _check_tu_args(m, n, r, q)
    _check_brute_cap(m, n, r)
    count = 0
    for d in range(r):
        ys = list(iter_compositions(d, n))
        for x in iter_compositions(d, m):
            if all(v < q for v in x):
                count += len(ys)
    return count


def u_bruteforce(m: int, n: int, r: int, q: int) -> int:
    """U by literal tuple enumeration; test-only ground truth."""
    _check_tu_args(m, n, r, q)
    _check_brute_cap(m, n, r)
    count = 0
    for d in range(r):
        ys = [y for y in iter_compositions(d, n) if all(v < q for v in y)]
        for x in iter_compositions(d, m):
            if all(v < q for v in x):
                count += len(ys)
    return count
