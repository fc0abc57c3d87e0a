import math

import pytest

from apsq.spectral_verify import (
    dds_lhs,
    dds_rhs,
    dh_lhs,
    dh_rhs,
    h_sum_lhs,
    h_sum_rhs,
    verify_double,
    verify_h_sum,
    verify_single,
)


def brute_dh(h, s, b_max):
    # direct scan of c^2 = 2b^2 - h, weighting (c, b) by the number of sign
    # choices of c, normalized like the series
    total = 0.0
    for b in range(1, b_max + 1):
        t = 2 * b * b - h
        if t < 0:
            continue
        c = math.isqrt(t)
        if c * c != t:
            continue
        total += 2.0 * (2.0 if c > 0 else 1.0) / b ** (2.0 * s)
    return total


def test_dh_lhs_matches_brute():
    for h, s in ((1, 1.0), (7, 1.5), (8, 2.0), (9, 1.0)):
        assert float(dh_lhs(h, s, b_max=2000)) == pytest.approx(
            brute_dh(h, s, 2000), rel=1e-15
        )


def test_single_series_value_at_unit():
    # both routes evaluate to the same constant at (h, s) = (1, 1)
    lhs = float(dh_lhs(1, 1.0))
    rhs = float(dh_rhs(1, 1.0))
    assert lhs == pytest.approx(4.164901, abs=5e-7)
    assert rhs == pytest.approx(4.164901, abs=5e-7)
    assert lhs == pytest.approx(4.164900541485606, rel=1e-12)


@pytest.mark.parametrize("h", [1, 2, 4, 7, 8, 9, 14, 16, 17, 23, 25, 49])
@pytest.mark.parametrize("s", [0.75, 1.0, 1.5, 2.0])
def test_single_series_grid(h, s):
    report = verify_single(h, s, rel_tol=1e-6)
    assert report.passed, report


@pytest.mark.parametrize("h", [3, 5, 11, 13, 19, 21])
def test_vanishing_classes(h):
    assert float(dh_lhs(h, 1.0)) == 0.0
    assert float(dh_rhs(h, 1.0)) == 0.0


def test_double_series_value():
    lhs = float(dds_lhs(2.0, 2.0))
    rhs = float(dds_rhs(2.0, 2.0))
    assert lhs == pytest.approx(8.01281, abs=5e-5)
    assert rhs == pytest.approx(lhs, rel=1e-10)


def test_double_series_truncated_sum():
    # the h = m = 1 term contributes 8; the tail is tiny and positive
    value = float(dds_lhs(2.0, 2.0, h_max=10**4))
    assert value == pytest.approx(8.012816812560162, rel=1e-12)
    assert value > 8.0


def test_double_series_monotone_in_cutoff():
    v1 = float(dds_lhs(2.0, 2.0, h_max=10**2))
    v2 = float(dds_lhs(2.0, 2.0, h_max=10**4))
    assert v2 >= v1


def test_double_series_h9_contributes_nothing():
    # 3 | gcd forces no coprime solution of a^2 = 2b^2 - 9
    v_with = float(dds_lhs(2.0, 2.0, h_max=9))
    v_without = float(dds_lhs(2.0, 2.0, h_max=8))
    assert v_with == v_without


@pytest.mark.parametrize("s", [1.5, 2.0, 3.0])
@pytest.mark.parametrize("w", [1.5, 2.0, 3.0])
def test_double_series_grid(s, w):
    report = verify_double(s, w, rel_tol=1e-5)
    assert report.passed, report


@pytest.mark.parametrize("m", [1, 2])
def test_h_sum_identity(m):
    report = verify_h_sum(m, 3.0)
    assert report.rel_diff <= 1e-6
    assert report.passed


def test_h_sum_lhs_brute():
    from apsq.quad_field import lambda_n

    m, s, h_max = 1, 3.0, 400
    direct = sum(lambda_n(h * h, m) / h**s for h in range(1, h_max + 1))
    assert float(h_sum_lhs(m, s, h_max)) == pytest.approx(direct, abs=1e-9)


def test_report_fields():
    report = verify_single(7, 1.5)
    assert report.lhs == pytest.approx(report.rhs, rel=1e-10)
    assert report.abs_diff >= 0.0
    assert report.tolerance == 1e-6
    assert report.parameters["h"] == 7
