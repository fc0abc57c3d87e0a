import cmath
import math

import mpmath
import pytest
from scipy.special import gamma as scipy_gamma

from apsq.lfun_special import (
    SeriesValue,
    dirichlet_L,
    gamma_complex,
    gamma_pair,
    gauss_2f1_quarterhalf,
    hecke_L,
    hurwitz_zeta,
    hypergeom_product_constant,
    zeta2_factor,
)
from apsq.quad_field import LOG_UNIT


def test_hurwitz_matches_mpmath():
    for s in (0.5, 1.5, 2.0, 3.25):
        for x in (0.125, 0.5, 0.875, 1.0):
            expect = float(mpmath.zeta(s, x))
            assert hurwitz_zeta(s, x) == pytest.approx(expect, rel=1e-12)


def test_hurwitz_domain():
    with pytest.raises(ValueError):
        hurwitz_zeta(1.0, 0.5)
    with pytest.raises(ValueError):
        hurwitz_zeta(-1.0, 0.5)
    with pytest.raises(ValueError):
        hurwitz_zeta(2.0, 1.5)


def test_class_number_anchor():
    value = float(dirichlet_L(1.0, "chi8"))
    assert value == pytest.approx(LOG_UNIT / math.sqrt(2.0), abs=1e-10)


def test_principal_anchor():
    value = float(dirichlet_L(2.0, "principal8"))
    assert value == pytest.approx(math.pi**2 / 8.0, abs=1e-10)


def test_chi4_leibniz():
    assert float(dirichlet_L(1.0, "chi4")) == pytest.approx(math.pi / 4.0, abs=1e-12)


def test_dirichlet_matches_direct_sum():
    # slowly convergent direct Dirichlet series at s = 3
    chars = {"chi8": {1: 1, 3: -1, 5: -1, 7: 1}, "chi4": {1: 1, 3: -1}}
    for which, table in chars.items():
        q = max(table) + 1
        direct = sum(
            table.get(n % q, 0) / n**3 for n in range(1, 200000)
        )
        assert float(dirichlet_L(3.0, which)) == pytest.approx(direct, rel=1e-12)


def test_principal_pole_raises():
    with pytest.raises(ValueError):
        dirichlet_L(1.0, "principal8")
    with pytest.raises(ValueError):
        dirichlet_L(2.0, "nope")


def test_zeta2_factor():
    assert zeta2_factor(2.0) == pytest.approx(math.pi**2 / 8.0, rel=1e-12)
    with pytest.raises(ValueError):
        zeta2_factor(1.0)


def test_hecke_trivial_power_is_dedekind_zeta():
    # eta^0 gives the Dedekind zeta of Q(sqrt 2) = zeta(s) L(s, chi8)
    for s in (2.0, 3.0):
        got = hecke_L(s, 0, 10**5)
        expect = zeta2_factor(s) / (1.0 - 2.0**-s) * float(dirichlet_L(s, "chi8"))
        assert got.value == pytest.approx(expect, abs=5.0 * got.tail_estimate + 1e-10)


def test_hecke_matches_direct_ideal_sum():
    # lambda_m(n) sums eta^m over the ideals of norm n, so the Dirichlet
    # series of lambda_2 is an independent route to L(s, eta^2)
    from apsq.quad_field import lambda_n

    s = 4.0
    got = hecke_L(s, 2, 10**4)
    direct = sum(lambda_n(n, 2) / n**s for n in range(1, 10**4))
    assert got.value == pytest.approx(direct, abs=1e-8)


def test_hecke_domain():
    with pytest.raises(ValueError):
        hecke_L(2.0, 1, 100)
    with pytest.raises(ValueError):
        hecke_L(1.0, 2, 100)


def test_gamma_against_scipy():
    for z in (0.25, 1.0, 2.5, 7.0, complex(1.0, 1.7822), complex(0.75, -3.0),
              complex(-1.5, 0.5), complex(0.1, 0.1)):
        got = gamma_complex(z)
        expect = complex(scipy_gamma(z))
        assert cmath.isclose(got, expect, rel_tol=1e-12)


def test_gamma_poles():
    for z in (0.0, -1.0, -5.0):
        with pytest.raises(ValueError):
            gamma_complex(z)


def test_gamma_pair_is_squared_modulus():
    v = gamma_pair(1.5, 2.0)
    assert v == pytest.approx(abs(complex(scipy_gamma(complex(1.5, 2.0)))) ** 2, rel=1e-12)


def test_2f1_against_mpmath():
    expect = float(mpmath.hyp2f1(0.25, 0.5, 1.25, 0.5))
    assert gauss_2f1_quarterhalf() == pytest.approx(expect, rel=1e-13)
    assert hypergeom_product_constant() == pytest.approx(
        2.0 * math.sqrt(2.0) / math.pi**2 * expect, rel=1e-13
    )


def test_series_value_floats():
    sv = SeriesValue(1.5, {"n": 3}, 0.01)
    assert float(sv) == 1.5
