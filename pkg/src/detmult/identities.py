"""Binomial identities and the colored-chain bijection behind the
central one.

The product identity says

    sum_w C(c+w, a+b) C(a, w) C(b, w)  =  C(c, a) C(c, b).

Both sides count things. The right side counts chains of a red and b
blue integers with values in [c], strictly increasing in the order where
red beats blue at equal value; such a chain is determined by its set of
red values and set of blue values. The left side counts 4-tuples
(w, A, B, C) with A a w-subset of [a], B a w-subset of [b], and C an
(a+b)-subset of [c+w]. encode_chain and decode_chain realize mutually
inverse maps between the two collections: A and B record which red and
blue elements bound the red-then-blue adjacent pairs, and C holds the
value set together with shifted markers for the pairs whose two values
coincide.

A Wilf-Zeilberger style certificate for the same identity is checked
pointwise in exact rational arithmetic: with
F(w, a) = C(c+w, a+b) C(a, w) C(b, w) and
G(w, a) = w^2 (c + w - a - b) / ((1 + a + b)(w - 1 - a)) * F(w, a),
the recurrence G(w+1, a) - G(w, a) = (a - c) F(w, a) + (1 + a) F(w, a+1)
holds wherever G is defined; the pole at w = a + 1 is skipped and
reported, never silently patched.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exactmath import binom

__all__ = [
    "RED",
    "BLUE",
    "ColoredChain",
    "ChainCode",
    "encode_chain",
    "decode_chain",
    "iter_chains",
    "iter_codes",
    "product_identity_lhs",
    "hockeystick_corollary_check",
    "general_corollary_check",
    "WZReport",
    "check_wz_certificate",
]

RED = "r"
BLUE = "b"


@dataclass(frozen=True)
class ColoredChain:
    """Strictly increasing chain of colored integers with values in [1, bound].

    Red precedes blue at equal value, so a chain is exactly a pair of
    value sets; the merged ordering is derived, not stored.
    """

    red_values: tuple
    blue_values: tuple
    bound: int

    def __post_init__(self):
        object.__setattr__(self, "red_values", tuple(self.red_values))
        object.__setattr__(self, "blue_values", tuple(self.blue_values))
        if self.bound < 0:
            raise ValueError("value bound must be nonnegative")
        for values in (self.red_values, self.blue_values):
            for v in values:
                if not isinstance(v, int) or not 1 <= v <= self.bound:
                    raise ValueError(
                        f"chain values must be integers in [1, {self.bound}]"
                    )
            if any(x >= y for x, y in zip(values, values[1:])):
                raise ValueError("values of each color must strictly increase")

    @property
    def chain_type(self):
        """(number of reds, number of blues)."""
        return (len(self.red_values), len(self.blue_values))

    def elements(self):
        """Merged chain as (value, color) pairs, increasing, red before blue."""
        merged = [(v, RED) for v in self.red_values]
        merged += [(v, BLUE) for v in self.blue_values]
        merged.sort(key=lambda e: (e[0], 0 if e[1] == RED else 1))
        return tuple(merged)

    def __str__(self):
        return "<".join(f"{v}{color}" for v, color in self.elements())

    @classmethod
    def from_string(cls, text: str, bound: int) -> "ColoredChain":
        """Parse notation like '1r<2r<2b<5b'."""
        reds, blues = [], []
        for token in text.split("<"):
            token = token.strip()
            if len(token) < 2 or token[-1] not in (RED, BLUE):
                raise ValueError(f"bad chain token: {token!r}")
            (reds if token[-1] == RED else blues).append(int(token[:-1]))
        return cls(tuple(sorted(reds)), tuple(sorted(blues)), bound)


@dataclass(frozen=True)
class ChainCode:
    """The (w, A, B, C) encoding of a colored chain.

    A and B locate the red-then-blue adjacent pairs from the red and the
    blue side; C is the value set plus markers, shifted past the value
    bound, for the pairs whose values coincide.
    """

    w: int
    A: frozenset
    B: frozenset
    C: frozenset

    def __post_init__(self):
        object.__setattr__(self, "A", frozenset(self.A))
        object.__setattr__(self, "B", frozenset(self.B))
        object.__setattr__(self, "C", frozenset(self.C))
        if self.w < 0:
            raise ValueError("w must be nonnegative")
        if len(self.A) != self.w or len(self.B) != self.w:
            raise ValueError("A and B must both have exactly w elements")


def encode_chain(chain: ColoredChain) -> ChainCode:
    """Encode a chain as (w, A, B, C); inverse of decode_chain."""
    elems = chain.elements()
    n_el = len(elems)
    red_pos = [k + 1 for k, e in enumerate(elems) if e[1] == RED]
    blue_pos = [k + 1 for k, e in enumerate(elems) if e[1] == BLUE]
    # subindices of reds that start, and blues that end, an rb-pair
    a_set = {
        ell
        for ell, pos in enumerate(red_pos, 1)
        if pos < n_el and elems[pos][1] == BLUE
    }
    b_set = {
        ell
        for ell, pos in enumerate(blue_pos, 1)
        if pos > 1 and elems[pos - 2][1] == RED
    }
    values = {v for v, _ in elems}
    # mark which rb-pairs are stable (equal values), indexed along sorted A
    marks = set()
    for ell, s_ell in enumerate(sorted(a_set), 1):
        pos = red_pos[s_ell - 1]
        if elems[pos - 1][0] == elems[pos][0]:
            marks.add(ell)
    c_set = values | {chain.bound + ell for ell in marks}
    return ChainCode(len(a_set), frozenset(a_set), frozenset(b_set), frozenset(c_set))


def decode_chain(code: ChainCode, a: int, b: int, c: int) -> ColoredChain:
    """The unique chain of type (a, b) over [c] encoding to `code`.

    Raises ValueError when the code cannot come from such a chain.
    """
    w = code.w
    if w > min(a, b):
        raise ValueError("w exceeds min(a, b); no chain has that many rb-pairs")
    if not all(isinstance(x, int) and 1 <= x <= a for x in code.A):
        raise ValueError("A must be a subset of [a]")
    if not all(isinstance(x, int) and 1 <= x <= b for x in code.B):
        raise ValueError("B must be a subset of [b]")
    if len(code.C) != a + b:
        raise ValueError("C must have exactly a + b elements")
    if not all(isinstance(x, int) and 1 <= x <= c + w for x in code.C):
        raise ValueError("C must be a subset of [c + w]")

    values = sorted(x for x in code.C if x <= c)
    marks = {x - c for x in code.C if x > c}

    # color pattern: blue blocks end just before each paired blue, red
    # blocks end at each paired red; leftovers are blues then reds
    a_sorted = sorted(code.A)
    b_sorted = sorted(code.B)
    pattern = []
    blues_placed = reds_placed = 0
    for k in range(w):
        n_blue = b_sorted[k] - 1 - blues_placed
        pattern += [BLUE] * n_blue
        blues_placed += n_blue
        n_red = a_sorted[k] - reds_placed
        pattern += [RED] * n_red
        reds_placed += n_red
    pattern += [BLUE] * (b - blues_placed)
    pattern += [RED] * (a - reds_placed)

    # blues completing a marked (stable) rb-pair repeat the previous value
    stable_blue_slots = set()
    pair_index = 0
    for t in range(len(pattern) - 1):
        if pattern[t] == RED and pattern[t + 1] == BLUE:
            pair_index += 1
            if pair_index in marks:
                stable_blue_slots.add(t + 1)
    if any(mark > pair_index for mark in marks):
        raise ValueError("C marks a stable rb-pair that the code does not define")

    reds, blues = [], []
    value_iter = iter(values)
    last = None
    for t, color in enumerate(pattern):
        v = last if t in stable_blue_slots else next(value_iter)
        (reds if color == RED else blues).append(v)
        last = v
    return ColoredChain(tuple(reds), tuple(blues), c)


def iter_chains(a: int, b: int, c: int):
    """Yield every chain of type (a, b) over [c]."""
    for red in itertools.combinations(range(1, c + 1), a):
        for blue in itertools.combinations(range(1, c + 1), b):
            yield ColoredChain(red, blue, c)


def iter_codes(a: int, b: int, c: int):
    """Yield every valid (w, A, B, C) tuple for the given type and bound."""
    for w in range(min(a, b) + 1):
        for a_set in itertools.combinations(range(1, a + 1), w):
            for b_set in itertools.combinations(range(1, b + 1), w):
                for c_set in itertools.combinations(range(1, c + w + 1), a + b):
                    yield ChainCode(w, frozenset(a_set), frozenset(b_set), frozenset(c_set))


def product_identity_lhs(a: int, b: int, c: int) -> int:
    """sum_w C(c+w, a+b) C(a, w) C(b, w); equals C(c, a) C(c, b).

    Summands vanish beyond w = min(a, b), so the sum stops there.
    """
    if a < 0 or b < 0 or c < 0:
        raise ValueError("a, b, c must be nonnegative")
    return sum(
        binom(c + w, a + b) * binom(a, w) * binom(b, w)
        for w in range(min(a, b) + 1)
    )


def hockeystick_corollary_check(a: int, b: int, c: int) -> bool:
    """Check sum_{i<=c} C(i,a) C(i,b) = sum_j C(c+j+1, a+b+1) C(a,j) C(b,j).

    Both sides are computed by direct summation.
    """
    lhs = sum(binom(i, a) * binom(i, b) for i in range(c + 1))
    rhs = sum(
        binom(c + j + 1, a + b + 1) * binom(a, j) * binom(b, j)
        for j in range(min(a, b) + 1)
    )
    return lhs == rhs


def general_corollary_check(t: int, u: int, v: int, w: int, c: int) -> bool:
    """Check the shifted two-factor sum against its triple-sum expansion.

    sum_{i<=c} C(t+i, u) C(v+i, w)
      = sum_{a,b,j} C(t, u-a) C(v, w-b) C(c+j+1, a+b+1) C(a, j) C(b, j).
    """
    lhs = sum(binom(t + i, u) * binom(v + i, w) for i in range(c + 1))
    rhs = 0
    for a in range(u + 1):
        ct = binom(t, u - a)
        if ct == 0:
            continue
        for b in range(w + 1):
            cv = binom(v, w - b)
            if cv == 0:
                continue
            for j in range(min(a, b) + 1):
                rhs += ct * cv * binom(c + j + 1, a + b + 1) * binom(a, j) * binom(b, j)
    return lhs == rhs


@dataclass(frozen=True)
class WZReport:
    """Outcome of a certificate sweep; truthy iff no lattice point failed."""

    ok: bool
    failures: tuple
    skipped: tuple

    def __bool__(self):
        return self.ok


def _wz_f(w, a, b, c):
    return binom(c + w, a + b) * binom(a, w) * binom(b, w)


def _wz_g(w, a, b, c):
    """Certificate companion; None at the pole w = a + 1."""
    den = (1 + a + b) * (w - 1 - a)
    if den == 0:
        return None
    return Fraction(w * w * (c + w - a - b), den) * _wz_f(w, a, b, c)


def check_wz_certificate(w_range, a_range, b: int, c: int) -> WZReport:
    """Verify G(w+1, a) - G(w, a) = (a - c) F(w, a) + (1 + a) F(w, a+1)
    at every lattice point of the given inclusive (lo, hi) ranges.

    Points where either G value hits the pole are recorded as skipped,
    not failed; a failure carries its witness (w, a).
    """
    w_lo, w_hi = w_range
    a_lo, a_hi = a_range
    if b < 0 or c < 0:
        raise ValueError("b and c must be nonnegative")
    failures = []
    skipped = []
    for w in range(w_lo, w_hi + 1):
        for a in range(a_lo, a_hi + 1):
            g_next = _wz_g(w + 1, a, b, c)
            g_here = _wz_g(w, a, b, c)
            if g_next is None or g_here is None:
                skipped.append((w, a))
                continue
            lhs = g_next - g_here
            rhs = (a - c) * _wz_f(w, a, b, c) + (1 + a) * _wz_f(w, a + 1, b, c)
            if lhs != rhs:
                failures.append((w, a))
    return WZReport(not failures, tuple(failures), tuple(skipped))
