from fractions import Fraction

import pytest

from detmult.exactmath import Polynomial
from detmult.length import length_closed
from detmult.multiplicity import (
    MultiplicityResult,
    analyze,
    e_s_value,
    fit_length_polynomial,
    h_s_value,
    nonpolynomial_demo,
    normalizer,
)

F = Fraction


def cube_corner_volume(s, d):
    """normalizer extended by 0 at nonpositive s, for branch comparisons."""
    s = F(s)
    return normalizer(s, d) if s > 0 else F(0)


def two_by_two_branch(s):
    """Length polynomial in q for the 2x2 case, by branch of s."""
    s = F(s)
    if s <= 1:
        return Polynomial([0, s / 6, s * s / 2, s ** 3 / 3])
    if s <= 2:
        return Polynomial(
            [
                0,
                s / 6 - F(2, 3) * (s - 1),
                s * s / 2 - 2 * (s - 1) ** 2,
                s ** 3 / 3 - F(4, 3) * (s - 1) ** 3,
            ]
        )
    return Polynomial([0, F(-1, 3), 0, F(4, 3)])


def two_by_three_branch(s):
    """Length polynomial in q for the 2x3 case, by branch of s."""
    s = F(s)
    if s < 1:
        return Polynomial([0, s / 12, 3 * s ** 2 / 8, 5 * s ** 3 / 12, s ** 4 / 8])
    if s < 2:
        return Polynomial(
            [
                0,
                s / 12 - (s - 1) / 2,
                3 * s ** 2 / 8 - F(9, 4) * (s - 1) ** 2,
                5 * s ** 3 / 12 - F(5, 2) * (s - 1) ** 3,
                s ** 4 / 8 - F(3, 4) * (s - 1) ** 4,
            ]
        )
    if s < 3:
        return Polynomial(
            [
                0,
                s / 12 - F(1, 2),
                3 * s ** 2 / 8 - (5 * s - 1) / 4,
                5 * s ** 3 / 12 - (9 * s ** 2 - 9 * s - 8) / 4,
                s ** 4 / 8 - (4 * s ** 3 - 9 * s ** 2 + 7) / 4,
            ]
        )
    return Polynomial([0, F(-1, 4), F(-1, 8), F(-1, 4), F(13, 8)])


class TestNormalizer:
    def test_small_s_is_simplex_volume(self):
        assert normalizer(1, 3) == F(1, 6)
        assert normalizer(F(1, 2), 3) == F(1, 48)
        assert normalizer(F(1, 2), 4) == F(1, 384)

    def test_dimension_one_saturates_immediately(self):
        for s in (1, F(3, 2), 2, 7):
            assert normalizer(s, 1) == 1

    def test_two_dimensional_value(self):
        assert normalizer(2, 2) == 1
        assert normalizer(1, 2) == F(1, 2)

    def test_saturates_at_dimension(self):
        for d in range(1, 5):
            for s in (F(d), F(2 * d + 1, 2), F(d + 1)):
                assert normalizer(s, d) == 1

    def test_validation(self):
        with pytest.raises(ValueError):
            normalizer(0, 3)
        with pytest.raises(ValueError):
            normalizer(1, 0)


class TestFit:
    def test_2x2_golden(self):
        assert fit_length_polynomial(2, 2, 3, 2) == Polynomial([0, F(-1, 3), 0, F(4, 3)])
        assert fit_length_polynomial(2, 2, F(1, 2), 2) == Polynomial(
            [0, F(1, 12), F(1, 8), F(1, 24)]
        )

    def test_2x3_golden(self):
        assert fit_length_polynomial(2, 3, 3, 2) == Polynomial(
            [0, F(-1, 4), F(-1, 8), F(-1, 4), F(13, 8)]
        )

    def test_matches_branch_tables(self):
        for s in (F(1, 2), 1, F(3, 2), 2, 3):
            assert fit_length_polynomial(2, 2, s, 2) == two_by_two_branch(s)
        for s in (F(1, 2), F(3, 2), F(5, 2), 3):
            assert fit_length_polynomial(2, 3, s, 2) == two_by_three_branch(s)

    def test_piecewise_structure(self):
        # one polynomial serves each branch: the first for s <= 1, the
        # plateau cubic for s >= 2
        low_s = (F(1, 4), F(1, 2), F(3, 4), F(1))
        low = [fit_length_polynomial(2, 2, s, 2) for s in low_s]
        for s, poly in zip(low_s, low):
            assert poly == Polynomial([0, s / 6, s * s / 2, s ** 3 / 3])
        plateau = Polynomial([0, F(-1, 3), 0, F(4, 3)])
        for s in (F(9, 4), F(5, 2), 3, 4):
            assert fit_length_polynomial(2, 2, s, 2) == plateau

    def test_fresh_samples_beyond_verification_window(self):
        # the fit uses exponents e0+1 .. e0+m+n+2; probe three more
        for m, n in ((2, 2), (2, 3), (3, 3)):
            for s in (F(1, 2), 1, F(3, 2), 2, F(5, 2), 3, 4):
                poly = fit_length_polynomial(m, n, s, 2)
                assert poly.degree <= m + n - 1
                e0 = 1 if s.denominator == 2 else 0
                for e in range(e0 + m + n + 3, e0 + m + n + 6):
                    q = 2 ** e
                    assert poly(q) == length_closed(m, n, s, q), (m, n, s, q)

    def test_rejects_s_with_foreign_denominator(self):
        with pytest.raises(ValueError, match="power of p"):
            fit_length_polynomial(2, 2, F(4, 3), 2)
        with pytest.raises(ValueError, match="power of p"):
            fit_length_polynomial(2, 2, F(1, 2), 3)

    def test_odd_characteristic(self):
        assert fit_length_polynomial(2, 2, F(1, 3), 3) == two_by_two_branch(F(1, 3))

    def test_validation(self):
        with pytest.raises(ValueError):
            fit_length_polynomial(0, 2, 1, 2)
        with pytest.raises(ValueError):
            fit_length_polynomial(2, 2, 0, 2)
        with pytest.raises(ValueError):
            fit_length_polynomial(2, 2, 1, 1)


class TestHs:
    def test_worked_values(self):
        assert h_s_value(2, 2, 3, 2) == F(4, 3)
        assert h_s_value(2, 2, 1, 2) == F(1, 3)
        assert h_s_value(2, 3, 4, 2) == F(13, 8)

    def test_plateau(self):
        for m, n in ((2, 2), (2, 3), (3, 3)):
            assert h_s_value(m, n, 3, 2) == h_s_value(m, n, 4, 2)
        assert h_s_value(2, 2, 4, 2) == F(4, 3)
        assert h_s_value(2, 3, F(7, 2), 2) == F(13, 8)

    def test_2x2_closed_form_in_normalizers(self):
        for s in (F(1, 2), 1, F(3, 2), 2):
            want = 2 * cube_corner_volume(s, 3) - 2 * cube_corner_volume(s - 1, 3)
            assert h_s_value(2, 2, s, 2) == want

    def test_2x3_branch_table(self):
        table = {
            F(1, 2): F(1, 128),
            F(3, 2): F(75, 128),
            F(5, 2): F(201, 128),
            F(7, 2): F(13, 8),
        }
        for s, want in table.items():
            assert h_s_value(2, 3, s, 2) == want


class TestEs:
    def test_worked_values(self):
        # H_3(3) = 1, so e_s at the plateau equals h_s
        assert e_s_value(2, 2, 3, 2) == F(4, 3)
        assert e_s_value(2, 2, F(1, 2), 2) == 2
        assert e_s_value(2, 3, F(1, 2), 2) == 3

    def test_analyze_bundles_consistently(self):
        result = analyze(2, 3, F(3, 2), 2)
        assert isinstance(result, MultiplicityResult)
        assert result.s == F(3, 2)
        assert result.fitted_polynomial.degree <= 4
        assert result.h_s == result.fitted_polynomial.coefficient(4)
        assert result.normalizer == normalizer(F(3, 2), 4)
        assert result.e_s == result.h_s / result.normalizer


class TestNonpolynomialDemo:
    def test_branch_values(self):
        report = nonpolynomial_demo(2, F(4, 3), 10)
        assert report["branch_formulas_checked"] is True
        assert report["all_match"] is True
        by_e = {row["e"]: row for row in report["rows"]}
        assert by_e[1]["length"] == 4 and by_e[1]["branch"] == "odd"
        assert by_e[2]["length"] == 15 and by_e[2]["branch"] == "even"
        assert all(row["match"] for row in report["rows"])

    def test_other_parameters_report_raw_values(self):
        report = nonpolynomial_demo(3, F(1, 2), 4)
        assert report["branch_formulas_checked"] is False
        assert report["all_match"] is None
        assert len(report["rows"]) == 4
        assert all("match" not in row for row in report["rows"])

    def test_rejects_p_power_denominators(self):
        with pytest.raises(ValueError):
            nonpolynomial_demo(2, F(3, 2), 5)
        with pytest.raises(ValueError):
            nonpolynomial_demo(2, 3, 5)

    def test_validation(self):
        with pytest.raises(ValueError):
            nonpolynomial_demo(1, F(4, 3), 5)
        with pytest.raises(ValueError):
            nonpolynomial_demo(2, F(4, 3), 0)
