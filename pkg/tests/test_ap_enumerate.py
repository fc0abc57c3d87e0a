import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apsq.ap_enumerate import (
    ApTriple,
    MaxBound,
    OracleBudgetError,
    ProductBound,
    RatioBound,
    Rect,
    brute_oracle,
    count_region,
    enumerate_aps,
    equidist_ratio,
    main_term,
    rational_point_sum,
    rational_point_sum_direct,
    right_triangles,
    scan,
)


def test_ap_triple_validates():
    ApTriple(1, 5, 7)
    ApTriple(1, 1, 1)
    with pytest.raises(ValueError):
        ApTriple(1, 2, 3)


def test_triangle_roundtrip():
    t = ApTriple(7, 13, 17)
    tri = t.to_triangle()
    assert tri == (10, 24, 26)
    assert tri[0] ** 2 + tri[1] ** 2 == tri[2] ** 2
    assert ApTriple.from_triangle(*tri) == t


def test_region_validation():
    with pytest.raises(ValueError):
        RatioBound(100, Fraction(3, 2))
    with pytest.raises(ValueError):
        Rect(100, 200)
    with pytest.raises(ValueError):
        MaxBound(10**17)


def test_enumerate_small():
    triples = list(enumerate_aps(MaxBound(2500)))
    assert sorted(t.c for t in triples) == [1, 7, 17, 23, 31, 41, 47, 49]
    assert triples[0].trivial
    for t in triples:
        assert math.gcd(t.a, math.gcd(t.b, t.c)) == 1
        assert t.a <= t.b <= t.c


def test_enumerate_no_duplicates():
    triples = list(enumerate_aps(MaxBound(10**7)))
    assert len(triples) == len(set(triples))


@pytest.mark.parametrize(
    "region, expected",
    [
        (MaxBound(2500), 8),
        (MaxBound(24), 1),
        (RatioBound(2916, Fraction(1)), 9),
    ],
)
def test_exact_small_counts(region, expected):
    assert count_region(region, include_trivial=True) == expected
    assert brute_oracle(region, include_trivial=True) == expected


def test_trivial_flag():
    assert count_region(MaxBound(2500), include_trivial=False) == 7
    # trivial triple fails the product bound only below 1
    assert count_region(ProductBound(0)) == 0


def test_oracle_budget():
    with pytest.raises(OracleBudgetError):
        brute_oracle(MaxBound(10**10))


def _random_regions(n, seed):
    rng = random.Random(seed)
    regions = []
    while len(regions) < n:
        kind = rng.randrange(4)
        if kind == 0:
            num = rng.randint(0, 12)
            den = rng.randint(max(num, 1), 16)
            regions.append(RatioBound(rng.randint(10, 10**6), Fraction(num, den)))
        elif kind == 1:
            regions.append(MaxBound(rng.randint(10, 10**6)))
        elif kind == 2:
            x = rng.randint(10, 10**6)
            regions.append(Rect(x, rng.randint(1, x)))
        else:
            regions.append(ProductBound(rng.randint(10, 10**4)))
    return regions


@pytest.mark.parametrize("region", _random_regions(60, seed=20260823))
def test_count_matches_oracle(region):
    for include_trivial in (True, False):
        assert count_region(region, include_trivial) == brute_oracle(
            region, include_trivial
        )


def test_count_matches_python_enumeration():
    for region in _random_regions(20, seed=5):
        expected = sum(1 for _ in enumerate_aps(region))
        assert count_region(region) == expected


def test_threaded_counts_identical():
    region = RatioBound(10**10, Fraction(1, 2))
    base = count_region(region, threads=1)
    for threads in (2, 4, 16):
        assert count_region(region, threads=threads) == base


def test_huge_delta_fraction_falls_back():
    # denominator too large for the int64 kernel path
    delta = Fraction(10**15 - 1, 10**15)
    region = RatioBound(10**6, delta)
    assert count_region(region) == brute_oracle(region)


def test_main_term_accuracy():
    for region in (
        RatioBound(10**10, Fraction(1)),
        MaxBound(10**10),
        ProductBound(10**10),
    ):
        report_count = count_region(region)
        main = main_term(region)
        assert abs(report_count - main) / main < 0.01


def test_scan_reports():
    reports = scan("max", [10**6, 10**8])
    assert [r.region.x for r in reports] == [10**6, 10**8]
    for r in reports:
        assert r.count == count_region(MaxBound(r.region.x))
        assert r.abs_error == pytest.approx(abs(r.count - r.main_term))
    with pytest.raises(ValueError):
        scan("bogus", [100])


def test_rect_scan_uses_y_exponent():
    (report,) = scan("rect", [10**8], y_exponent=0.75)
    assert report.region.y == 10**6


def test_equidist_ratio_half():
    value = equidist_ratio(10**8, Fraction(1, 2))
    assert value == pytest.approx(2.0 / 3.0, abs=0.02)
    with pytest.raises(ValueError):
        equidist_ratio(100, Fraction(1, 2))


def test_rational_point_sum_routes_agree():
    for x in (10**2, 10**4, 10**6, 10**8):
        assert rational_point_sum(x) == rational_point_sum_direct(x)


def test_rational_point_sum_asymptotic():
    x = 10**8
    main = 4.0 / math.pi * math.sqrt(x)
    assert abs(rational_point_sum(x) - main) / main < 0.05


def brute_right_triangles(hyp_max, omega):
    tan_w = math.tan(omega)
    count = 0
    for u in range(2, math.isqrt(hyp_max) + 1):
        for v in range(1, u):
            if (u + v) % 2 == 0 or math.gcd(u, v) != 1:
                continue
            if u * u + v * v > hyp_max:
                continue
            a = abs(u * u - v * v - 2 * u * v)
            c = u * u - v * v + 2 * u * v
            if a <= tan_w * c:
                count += 1
    return count


@pytest.mark.parametrize("omega", [0.01, 0.1, 0.5, math.pi / 4])
def test_right_triangles_match_brute(omega):
    for hyp_max in (10**3, 10**5):
        report = right_triangles(hyp_max, omega)
        assert report.count == brute_right_triangles(hyp_max, omega)


def test_right_triangles_main_term():
    report = right_triangles(10**8, 0.2)
    assert report.rel_error < 0.01
    with pytest.raises(ValueError):
        right_triangles(100, 0.0)


@given(st.integers(min_value=2, max_value=300), st.integers(min_value=1, max_value=299))
@settings(max_examples=200)
def test_parametrization_yields_aps(u, v):
    if v >= u or (u + v) % 2 == 0 or math.gcd(u, v) != 1:
        return
    b = u * u + v * v
    a = abs(u * u - v * v - 2 * u * v)
    c = u * u - v * v + 2 * u * v
    t = ApTriple(a, b, c)
    assert math.gcd(t.a, math.gcd(t.b, t.c)) == 1
    assert not t.trivial
