"""Acceptance gate: the headline guarantees, one test per criterion.

Each test prints its own PASS/FAIL line (visible with pytest -s, and in
captured output on failure), so the module doubles as a report. All
comparisons are exact; there are no tolerances anywhere.
"""

import itertools
import math
import random
from contextlib import contextmanager
from fractions import Fraction

from detmult.exactmath import Polynomial, binom
from detmult.identities import (
    ChainCode,
    ColoredChain,
    check_wz_certificate,
    decode_chain,
    encode_chain,
    general_corollary_check,
    hockeystick_corollary_check,
    iter_chains,
    iter_codes,
    product_identity_lhs,
)
from detmult.length import length_closed, length_oracle, length_tu, regular_length
from detmult.multiplicity import e_s_value, fit_length_polynomial, h_s_value, normalizer
from detmult.staircase import (
    is_staircase,
    profile,
    reduce_to_staircase,
    staircase_from_profile,
)

F = Fraction


@contextmanager
def criterion(number, name):
    try:
        yield
    except BaseException:
        print(f"[criterion {number}] {name}: FAIL")
        raise
    print(f"[criterion {number}] {name}: PASS")


# frozen three-branch table for the 2x2 length polynomial, coefficients
# ascending in q: s^3/3 q^3 + s^2/2 q^2 + s/6 q for s <= 1, the middle
# branch subtracting the (s-1) terms for 1 < s <= 2, and 4/3 q^3 - 1/3 q
# beyond
GOLDEN_2X2 = {
    F(1, 2): (0, F(1, 12), F(1, 8), F(1, 24)),
    F(1): (0, F(1, 6), F(1, 2), F(1, 3)),
    F(3, 2): (0, F(-1, 12), F(5, 8), F(23, 24)),
    F(2): (0, F(-1, 3), 0, F(4, 3)),
    F(3): (0, F(-1, 3), 0, F(4, 3)),
}

# frozen four-branch table for the 2x3 length polynomial, leading
# coefficient 13/8 once s >= 3
GOLDEN_2X3 = {
    F(1, 2): (0, F(1, 24), F(3, 32), F(5, 96), F(1, 128)),
    F(3, 2): (0, F(-1, 8), F(9, 32), F(35, 32), F(75, 128)),
    F(5, 2): (0, F(-7, 24), F(-17, 32), F(7, 96), F(201, 128)),
    F(3): (0, F(-1, 4), F(-1, 8), F(-1, 4), F(13, 8)),
}


def test_criterion_1_golden_2x2_polynomials():
    with criterion(1, "golden 2x2 length polynomials"):
        for s, coeffs in GOLDEN_2X2.items():
            assert fit_length_polynomial(2, 2, s, 2) == Polynomial(coeffs), s


def test_criterion_2_golden_2x3_polynomials():
    with criterion(2, "golden 2x3 length polynomials"):
        for s, coeffs in GOLDEN_2X3.items():
            assert fit_length_polynomial(2, 3, s, 2) == Polynomial(coeffs), s


def test_criterion_3_triple_route_agreement():
    with criterion(3, "closed = T/U = enumeration on the full grid"):
        for m in range(1, 4):
            for n in range(1, 4):
                for q in (2, 4):
                    for sq in range(1, 3 * q + 1):
                        closed = length_closed(m, n, F(sq, q), q)
                        via_tu = length_tu(m, n, sq, q)
                        enumerated = length_oracle(m, n, sq, q)
                        assert closed == via_tu == enumerated, (m, n, sq, q)


def test_criterion_4_identity_suite():
    with criterion(4, "binomial identity suite"):
        for a in range(13):
            for b in range(13):
                for c in range(13):
                    assert product_identity_lhs(a, b, c) == binom(c, a) * binom(c, b)
        for a in range(9):
            for b in range(9):
                for c in range(13):
                    assert hockeystick_corollary_check(a, b, c)
        for params in itertools.product(range(7), repeat=5):
            assert general_corollary_check(*params)
        for b in range(11):
            for c in range(11):
                report = check_wz_certificate((0, 10), (0, 10), b, c)
                assert report.ok, (b, c, report.failures)


def test_criterion_5_bijection_suite():
    with criterion(5, "colored-chain bijection suite"):
        for a in range(4):
            for b in range(4):
                for c in range(5):
                    chains = list(iter_chains(a, b, c))
                    assert len(chains) == binom(c, a) * binom(c, b)
                    seen = set()
                    for chain in chains:
                        code = encode_chain(chain)
                        assert code not in seen
                        seen.add(code)
                        assert decode_chain(code, a, b, c) == chain
                    codes = list(iter_codes(a, b, c))
                    assert len(codes) == product_identity_lhs(a, b, c)
                    for code in codes:
                        assert encode_chain(decode_chain(code, a, b, c)) == code
        # the worked examples, character for character
        chain = ColoredChain.from_string(
            "1r<2r<3r<4b<5r<5b<6b<7b<8b<9r<10r<10b<11b<12r<13b", 15
        )
        assert encode_chain(chain) == ChainCode(
            4,
            frozenset({3, 4, 6, 7}),
            frozenset({1, 2, 6, 8}),
            frozenset(set(range(1, 14)) | {17, 18}),
        )
        decoded = decode_chain(
            ChainCode(
                2, frozenset({3, 5}), frozenset({1, 2}),
                frozenset(set(range(1, 15)) | {17}),
            ),
            7, 8, 15,
        )
        assert str(decoded) == "1r<2r<3r<4b<5r<6r<6b<7b<8b<9b<10b<11b<12b<13r<14r"


def test_criterion_6_staircase_suite():
    with criterion(6, "staircase reduction and profile bijection"):
        for m in range(1, 4):
            for n in range(1, 4):
                for flat in itertools.product(range(3), repeat=m * n):
                    mat = tuple(flat[i * n:(i + 1) * n] for i in range(m))
                    reduced = reduce_to_staircase(mat)
                    assert is_staircase(reduced)
                    assert profile(reduced) == profile(mat)
        rng = random.Random(20240817)
        for _ in range(1000):
            m, n = rng.randint(1, 5), rng.randint(1, 5)
            mat = tuple(tuple(rng.randint(0, 6) for _ in range(n)) for _ in range(m))
            reduced = reduce_to_staircase(mat)
            assert is_staircase(reduced)
            assert profile(reduced) == profile(mat)
        # round trip and uniqueness over all staircase matrices, entries <= 3
        for m in range(1, 4):
            for n in range(1, 4):
                seen = set()
                for flat in itertools.product(range(4), repeat=m * n):
                    mat = tuple(flat[i * n:(i + 1) * n] for i in range(m))
                    if not is_staircase(mat):
                        continue
                    prof = profile(mat)
                    assert prof not in seen
                    seen.add(prof)
                    assert staircase_from_profile(prof) == mat


def test_criterion_7_nonpolynomial_demo():
    with criterion(7, "regular-ring two-branch length at s = 4/3, p = 2"):
        values = {}
        for e in range(1, 11):
            q = 2 ** e
            r = math.ceil(F(4, 3) * q)
            got = regular_length(2, r, q)
            values[e] = got
            if e % 2:
                assert 9 * got == 7 * q * q + 5 * q - 2, e
            else:
                assert 9 * got == 7 * q * q + 7 * q - 5, e
        assert values[1] == 4 and values[2] == 15


def test_criterion_8_multiplicity_plateau():
    with criterion(8, "h_s and e_s plateaus"):
        for s in (F(3), F(4)):
            assert h_s_value(2, 2, s, 2) == F(4, 3)
            assert e_s_value(2, 2, s, 2) == F(4, 3) / normalizer(s, 3)
        for s in (F(7, 2), F(4)):
            assert h_s_value(2, 3, s, 2) == F(13, 8)
