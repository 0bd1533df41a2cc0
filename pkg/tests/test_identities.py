"""Tests for the Rogers-Ramanujan products and the m-shifted identity."""

from __future__ import annotations

import pytest

from qschur.identities import (
    gis_lhs,
    gis_rhs,
    rr_product_first,
    rr_product_second,
    verify_gis,
    verify_schur_limits,
)
from qschur.series import QSeries, series_first_mismatch

from .oracles import rr_coefficients

RR1_COEFFS = [1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6, 7, 9]
RR2_COEFFS = [1, 0, 1, 1, 1, 1, 2, 2, 3, 3, 4, 4, 6]


class TestProducts:
    def test_first_product_low_orders(self):
        assert rr_product_first(0) == QSeries.one(0)
        s = rr_product_first(7)
        assert [s.coefficient(e) for e in range(8)] == RR1_COEFFS[:8]
        s = rr_product_first(4)
        assert [s.coefficient(e) for e in range(5)] == RR1_COEFFS[:5]

    def test_second_product_low_orders(self):
        assert rr_product_second(0) == QSeries.one(0)
        assert rr_product_second(1) == QSeries.one(1)
        s = rr_product_second(6)
        assert [s.coefficient(e) for e in range(7)] == RR2_COEFFS[:7]

    def test_frozen_coefficient_tables(self):
        s1, s2 = rr_product_first(12), rr_product_second(12)
        assert [s1.coefficient(e) for e in range(13)] == RR1_COEFFS
        assert [s2.coefficient(e) for e in range(13)] == RR2_COEFFS

    def test_against_partition_oracle(self):
        s1, s2 = rr_product_first(60), rr_product_second(60)
        assert [s1.coefficient(e) for e in range(61)] == rr_coefficients(
            {1, 4}, 60
        )
        assert [s2.coefficient(e) for e in range(61)] == rr_coefficients(
            {2, 3}, 60
        )

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            rr_product_first(-1)
        with pytest.raises(ValueError):
            rr_product_second(-3)

    def test_truncation_consistency(self):
        """A deeper product truncates to exactly the shallower one."""
        assert rr_product_first(80).truncated(30) == rr_product_first(30)
        assert rr_product_second(80).truncated(30) == rr_product_second(30)


class TestRightHandSide:
    def test_m0_is_first_product(self):
        assert series_first_mismatch(gis_rhs(0, 4), rr_product_first(4), 4) is None

    def test_m1_is_second_product(self):
        assert series_first_mismatch(gis_rhs(1, 5), rr_product_second(5), 5) is None

    def test_m2_assembled_by_hand(self):
        # q^-1 * (E_0 * P1 - D_0 * P2) = q^-1 * (P1 - P2), truncated at 6.
        got = gis_rhs(2, 6)
        assert [got.coefficient(e) for e in range(7)] == [1, 0, 0, 1, 1, 1, 1]

    def test_lhs_examples(self):
        s = gis_lhs(0, 4)
        assert [s.coefficient(e) for e in range(5)] == [1, 1, 1, 1, 2]
        s = gis_lhs(1, 5)
        assert [s.coefficient(e) for e in range(6)] == [1, 0, 1, 1, 1, 1]
        for m in range(4):
            assert gis_lhs(m, 0) == QSeries.one(0)

    def test_lhs_coefficients_nonnegative(self):
        for m in range(0, 12):
            s = gis_lhs(m, 50)
            assert all(s.coefficient(e) >= 0 for e in range(51))


class TestVerifyGis:
    def test_classical_specializations(self):
        assert verify_gis(0, 100).passed
        assert verify_gis(1, 100).passed

    def test_deep_shift(self):
        assert verify_gis(7, 150).passed

    def test_report_fields(self):
        report = verify_gis(3, 40)
        assert report.label == "gis"
        assert report.params == {"m": 3, "order": 40}
        assert report.passed


class TestSchurLimits:
    def test_first_checkable_index(self):
        result = verify_schur_limits(2)
        assert result.all_passed
        assert len(result.reports) == 2
        assert {r.label for r in result.reports} == {
            "schur-limit-D",
            "schur-limit-E",
        }

    def test_deeper_indices(self):
        assert verify_schur_limits(30).all_passed
        assert verify_schur_limits(100).all_passed

    def test_below_two_rejected(self):
        with pytest.raises(ValueError):
            verify_schur_limits(1)
