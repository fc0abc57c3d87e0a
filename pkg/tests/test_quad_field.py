import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apsq.arith_core import chi8, is_prime, primes_up_to, sigma0_chi
from apsq.quad_field import (
    LOG_UNIT,
    T1,
    UNIT,
    QuadInt,
    eta_power,
    lambda_n,
    lambda_prime,
    pell_solutions,
    qconj,
    qmul,
    qnorm,
    spectral_param,
    split_data_up_to,
    split_prime,
)


def brute_pell(h, b_max):
    out = []
    for b in range(1, b_max + 1):
        cc = 2 * b * b - h
        if cc < 0:
            continue
        c = math.isqrt(cc)
        if c * c == cc:
            out.append((c, b))
    return out


@pytest.mark.parametrize("h", [1, 2, 4, 7, 8, 9, 14, 16, 17, 23, 25, 49, 3, 5, 12])
def test_pell_scan_matches_brute(h):
    assert pell_solutions(h, 3000, mode="scan").solutions == brute_pell(h, 3000)


@pytest.mark.parametrize("h", [1, 2, 4, 7, 8, 9, 14, 16, 17, 23, 25, 49, 41, 46])
def test_pell_orbit_matches_scan(h):
    scan = pell_solutions(h, 10**5, mode="scan")
    orbit = pell_solutions(h, 10**5, mode="orbit")
    assert scan.solutions == orbit.solutions
    for f in orbit.fundamentals:
        assert f.b * f.b <= h


def test_pell_empty_classes():
    for h in (3, 5, 11, 13, 19, 21):
        assert pell_solutions(h, 10**4).solutions == []


def test_quadint_arithmetic():
    x = QuadInt(3, 1)
    y = QuadInt(1, 2)
    assert qmul(x, y) == QuadInt(7, 7)
    assert qnorm(x) == 7
    assert qconj(x) == QuadInt(3, -1)
    assert qnorm(qmul(x, y)) == qnorm(x) * qnorm(y)


def test_split_kinds_follow_chi8():
    primes, kinds, _ = split_data_up_to(2000)
    for p, k in zip(primes.tolist(), kinds.tolist()):
        if p == 2:
            assert k == 0
        elif chi8(p) == 1:
            assert k == 1
        else:
            assert k == -1


@pytest.mark.parametrize("p", [7, 17, 23, 31, 41, 73, 89, 97, 100049, 999961])
def test_split_generator_has_norm_p(p):
    info = split_prime(p)
    assert info.kind == "split"
    assert abs(qnorm(info.generator)) == p
    # theta reproduces the prime eigenvalue through the character
    assert lambda_prime(p, 1) == pytest.approx(2.0 * math.cos(info.theta), abs=1e-12)


def test_split_prime_rejects_composite():
    with pytest.raises(ValueError):
        split_prime(15)


def test_spectral_param_scale():
    assert spectral_param(1) == pytest.approx(math.pi / (2.0 * LOG_UNIT))
    assert spectral_param(3) == pytest.approx(3.0 * T1)


def test_eta_unit_invariance():
    z = QuadInt(5, 2)
    eps2 = qmul(UNIT, UNIT)
    for m in (1, 2, 3, 6):
        v1 = eta_power(z, m)
        v2 = eta_power(qmul(z, eps2), m)
        assert abs(v1 - v2) < 1e-12
        assert abs(abs(v1) - 1.0) < 1e-12


def test_eta_conjugate_inverts():
    z = QuadInt(7, 2)
    for m in (1, 2, 5):
        assert abs(eta_power(z, m) * eta_power(qconj(z), m) - 1.0) < 1e-12


def test_lambda_prime_inert_and_ramified():
    assert lambda_prime(3, 1) == 0.0
    assert lambda_prime(5, 2) == 0.0
    assert lambda_prime(2, 1) == -1.0
    assert lambda_prime(2, 2) == 1.0


def test_lambda_bounded_on_primes():
    for p in primes_up_to(10**4).tolist():
        for m in (1, 2, 3):
            assert abs(lambda_prime(p, m)) <= 2.0 + 1e-12


@given(
    st.integers(min_value=1, max_value=5000),
    st.integers(min_value=1, max_value=5000),
    st.integers(min_value=0, max_value=4),
)
@settings(max_examples=300)
def test_lambda_multiplicative(a, b, m):
    if math.gcd(a, b) != 1:
        return
    assert lambda_n(a * b, m) == pytest.approx(lambda_n(a, m) * lambda_n(b, m), abs=1e-9)


@pytest.mark.parametrize("p", [7, 17, 23, 3, 13, 2])
def test_lambda_hecke_recurrence(p):
    # lambda(p^k) = lambda(p) lambda(p^(k-1)) - chi8(p) lambda(p^(k-2))
    for m in (1, 2, 3):
        for k in range(2, 7):
            expect = lambda_n(p ** (k - 1), m) * lambda_prime(p, m) - chi8(
                p
            ) * lambda_n(p ** (k - 2), m)
            assert lambda_n(p**k, m) == pytest.approx(expect, abs=1e-9)


def test_lambda_zero_is_divisor_character_sum():
    for n in range(1, 3000):
        assert lambda_n(n, 0) == pytest.approx(float(sigma0_chi(n)), abs=1e-9)


def test_lambda_from_pell_orbit():
    # lambda_m(h) equals the sum of cos(m arg) over ideal classes dividing h,
    # recovered here from the Pell solutions of norm -h for split h
    for h in (7, 17, 23):
        info = split_prime(h)
        assert lambda_n(h, 2) == pytest.approx(2.0 * math.cos(2.0 * info.theta), abs=1e-9)


def test_split_data_is_cached_and_consistent():
    p1 = split_data_up_to(500)
    p2 = split_data_up_to(500)
    assert (p1[0] == p2[0]).all()
    assert len(p1[0]) == len(primes_up_to(500))
