"""Monomials on an m x n grid of variables, seen as exponent matrices.

A matrix is *staircase* if no nonzero entry lies strictly northwest of
another nonzero entry, so the support runs southwest to northeast. Any
exponent matrix can be pushed into staircase form by repeatedly trading
a violating northwest/southeast entry pair for its antidiagonal
companion (the 2x2-minor exchange); the trade preserves all row and
column sums. Staircase matrices are in bijection with their (row sums,
column sums) profiles, which turns counting staircase monomials into
counting integer tuples.

A *stair* matrix is a staircase matrix whose support fits inside one row
plus one column; it is a *q-stair* if that row and that column each sum
to exactly q. Divisibility by q-stairs is what membership in the
Frobenius power ideal looks like on staircase monomials.
"""

from __future__ import annotations

from typing import NamedTuple

from .counting import bounded_compositions_oracle, iter_compositions
from .exactmath import binom

__all__ = [
    "TupleProfile",
    "profile",
    "is_staircase",
    "is_stair",
    "is_q_stair",
    "reduce_to_staircase",
    "staircase_from_profile",
    "count_staircase_basis",
    "count_staircase_basis_naive",
    "iter_basis_profiles",
]


class TupleProfile(NamedTuple):
    """Row sums and column sums of an exponent matrix.

    Realizable profiles have equal totals; each realizable profile is hit
    by exactly one staircase matrix.
    """

    rows: tuple
    cols: tuple


def _as_matrix(matrix):
    rows = tuple(tuple(entry for entry in row) for row in matrix)
    if not rows or not rows[0]:
        raise ValueError("matrix must have at least one row and one column")
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise ValueError("matrix rows must all have the same length")
    for row in rows:
        for entry in row:
            if not isinstance(entry, int) or entry < 0:
                raise ValueError("matrix entries must be nonnegative integers")
    return rows


def profile(matrix) -> TupleProfile:
    """Row sums and column sums of an exponent matrix."""
    m = _as_matrix(matrix)
    rows = tuple(sum(row) for row in m)
    cols = tuple(sum(row[j] for row in m) for j in range(len(m[0])))
    return TupleProfile(rows, cols)


def is_staircase(matrix) -> bool:
    """True iff no nonzero entry sits strictly northwest of another."""
    m = _as_matrix(matrix)
    # violation <=> some row's leftmost support is left of some lower
    # row's rightmost support
    deepest = -1
    for row in reversed(m):
        support = [j for j, entry in enumerate(row) if entry]
        if not support:
            continue
        if support[0] < deepest:
            return False
        deepest = max(deepest, support[-1])
    return True


def _support_fits_cross(m, support, c, d):
    return all(i == c or j == d for i, j in support)


def is_stair(matrix) -> bool:
    """True iff the matrix is staircase with support inside one row plus one column."""
    m = _as_matrix(matrix)
    if not is_staircase(m):
        return False
    support = [(i, j) for i, row in enumerate(m) for j, entry in enumerate(row) if entry]
    return any(
        _support_fits_cross(m, support, c, d)
        for c in range(len(m))
        for d in range(len(m[0]))
    )


def is_q_stair(matrix, q: int) -> bool:
    """True iff some stair witness (c, d) has row c and column d both summing to q."""
    m = _as_matrix(matrix)
    if q < 1:
        raise ValueError("q must be >= 1")
    if not is_staircase(m):
        return False
    support = [(i, j) for i, row in enumerate(m) for j, entry in enumerate(row) if entry]
    for c in range(len(m)):
        if sum(m[c]) != q:
            continue
        for d in range(len(m[0])):
            if sum(row[d] for row in m) != q:
                continue
            if _support_fits_cross(m, support, c, d):
                return True
    return False


def _first_violation(entries, rows, cols):
    for a in range(rows):
        row_a = entries[a]
        for c in range(cols):
            if row_a[c] == 0:
                continue
            for b in range(a + 1, rows):
                row_b = entries[b]
                for d in range(c + 1, cols):
                    if row_b[d]:
                        return a, c, b, d
    return None


def reduce_to_staircase(matrix):
    """Staircase normal form of an exponent matrix.

    Repeatedly applies the minor exchange at the lexicographically first
    violating quadruple (a, c, b, d): move mass off the northwest and
    southeast corners onto the antidiagonal pair. The exchange preserves
    the profile, and sum(E[i][j] * i * j) drops by at least one per unit
    moved, so the loop terminates. Draining min(E[a][c], E[b][d]) in one
    step is equivalent to unit moves because the first violation cannot
    shift while both corners stay positive.
    """
    entries = [list(row) for row in _as_matrix(matrix)]
    rows, cols = len(entries), len(entries[0])
    while True:
        quad = _first_violation(entries, rows, cols)
        if quad is None:
            return tuple(tuple(row) for row in entries)
        a, c, b, d = quad
        t = min(entries[a][c], entries[b][d])
        entries[a][c] -= t
        entries[b][d] -= t
        entries[a][d] += t
        entries[b][c] += t


def staircase_from_profile(prof) -> tuple:
    """The unique staircase matrix with the given row and column sums.

    Northeast-corner greedy rule: start at (row 1, last column), place as
    much as the remaining row and column demands allow, then move down or
    left past whichever demand was exhausted. The placement path only
    moves down and left, which is exactly the staircase support shape.
    """
    rows, cols = tuple(prof[0]), tuple(prof[1])
    if not rows or not cols:
        raise ValueError("profile must have at least one row and one column")
    if any(not isinstance(v, int) or v < 0 for v in rows + cols):
        raise ValueError("profile entries must be nonnegative integers")
    if sum(rows) != sum(cols):
        raise ValueError("row total and column total differ; no such matrix")
    entries = [[0] * len(cols) for _ in rows]
    need_row = list(rows)
    need_col = list(cols)
    remaining = sum(rows)
    i, j = 0, len(cols) - 1
    while remaining:
        if need_row[i] == 0:
            i += 1
            continue
        if need_col[j] == 0:
            j -= 1
            continue
        t = min(need_row[i], need_col[j])
        entries[i][j] = t
        need_row[i] -= t
        need_col[j] -= t
        remaining -= t
    return tuple(tuple(row) for row in entries)


def _check_basis_args(m, n, r, q):
    if m < 1 or n < 1:
        raise ValueError("dimensions m and n must be >= 1")
    if r < 0:
        raise ValueError("degree bound r must be >= 0")
    if q < 1:
        raise ValueError("q must be >= 1")


def count_staircase_basis(m: int, n: int, r: int, q: int) -> int:
    """Number of profiles with equal totals < r and all row sums < q or
    all column sums < q; equivalently the number of staircase monomials
    surviving both the degree cutoff and the q-stair divisibility test.

    Inclusion-exclusion per degree over the two bounded-side events,
    using the DP composition counts so this stays independent of the
    closed forms it gets checked against.
    """
    _check_basis_args(m, n, r, q)
    total = 0
    for d in range(r):
        rows_bounded = bounded_compositions_oracle(m, d, q)
        cols_bounded = bounded_compositions_oracle(n, d, q)
        total += (
            rows_bounded * binom(d + n - 1, n - 1)
            + cols_bounded * binom(d + m - 1, m - 1)
            - rows_bounded * cols_bounded
        )
    return total


def iter_basis_profiles(m: int, n: int, r: int, q: int):
    """Yield each counted profile once; the naive lister behind the counts."""
    _check_basis_args(m, n, r, q)
    for d in range(r):
        ys = [(y, all(v < q for v in y)) for y in iter_compositions(d, n)]
        for x in iter_compositions(d, m):
            x_ok = all(v < q for v in x)
            for y, y_ok in ys:
                if x_ok or y_ok:
                    yield TupleProfile(x, y)


def count_staircase_basis_naive(m: int, n: int, r: int, q: int) -> int:
    """Basis size by direct profile enumeration; test-only ground truth."""
    return sum(1 for _ in iter_basis_profiles(m, n, r, q))
