"""Two-sided numerical evaluation of the spectral identities: the single
shifted series D_h(s) against its dihedral-eigenvalue expansion, and the
double series D(s, w) against its Hecke L-function expansion."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

from .arith_core import smallest_prime_factors
from .lfun_special import (
    SeriesValue,
    gamma_complex,
    gamma_pair,
    hecke_L,
    zeta2_factor,
)
from .quad_field import (
    LOG_UNIT,
    T1,
    _lambda_prime_power,
    lambda_n,
    pell_solutions,
)

__all__ = [
    "IdentityReport",
    "dh_lhs",
    "dh_rhs",
    "verify_single",
    "dds_lhs",
    "dds_rhs",
    "verify_double",
    "h_sum_lhs",
    "h_sum_rhs",
    "verify_h_sum",
]

_REL_FLOOR = 1e-30


@dataclass(frozen=True)
class IdentityReport:
    """One two-sided identity evaluation with its truncation provenance."""

    parameters: dict[str, Any]
    lhs: float
    rhs: float
    abs_diff: float
    rel_diff: float
    lhs_truncation: dict[str, Any]
    rhs_truncation: dict[str, Any]
    tolerance: float
    passed: bool


def _report(parameters, lhs: SeriesValue, rhs: SeriesValue, tol: float) -> IdentityReport:
    abs_diff = abs(lhs.value - rhs.value)
    rel_diff = abs_diff / max(abs(rhs.value), _REL_FLOOR)
    passed = rel_diff <= tol or (lhs.value == 0.0 and rhs.value == 0.0)
    return IdentityReport(
        parameters,
        lhs.value,
        rhs.value,
        abs_diff,
        rel_diff,
        lhs.truncation,
        rhs.truncation,
        tol,
        passed,
    )


def _default_b_max(s: float) -> int:
    # geometric orbit growth makes large bounds free in orbit mode; push the
    # per-term cutoff to ~1e-16 relative
    return max(1000, int(10 ** min(12.0, 8.0 / s)) + 1)


def dh_lhs(h: int, s: float, b_max: int | None = None) -> SeriesValue:
    """sum_{m >= 1} r1(m) r1(2m - h) / m^s over the Pell support m = b^2.

    Each solution (c, b) of c^2 - 2b^2 = -h contributes 2 * r1(c^2) / b^(2s),
    where r1(0) = 1 covers the c = 0 case 2m = h.
    """
    if h < 1:
        raise ValueError("dh_lhs requires h >= 1")
    if s <= 0:
        raise ValueError("dh_lhs requires s > 0")
    if b_max is None:
        b_max = _default_b_max(s)
    orbit = pell_solutions(h, b_max)
    terms = [
        2.0 * (2.0 if c > 0 else 1.0) * float(b) ** (-2.0 * s)
        for (c, b) in orbit.solutions
    ]
    value = math.fsum(terms)
    tail = 4.0 * (len(orbit.fundamentals) + 1) * float(b_max) ** (-2.0 * s)
    return SeriesValue(value, {"b_max": b_max, "h": h}, tail)


def dh_rhs(h: int, s: float, m_max: int = 16) -> SeriesValue:
    """The dihedral-spectrum side of the single-series identity.

    sum_{m in Z} (-1)^m lambda_m(h) / h^s
    * Gamma(s + i t_m) Gamma(s - i t_m) / (2^(1-3s) log(1+sqrt2) Gamma(2s)),
    truncated to |m| <= m_max and summed largest |m| first.
    """
    if h < 1:
        raise ValueError("dh_rhs requires h >= 1")
    if s <= 0.5:
        raise ValueError("dh_rhs requires s > 1/2")
    total = 0.0
    for m in range(m_max, 0, -1):
        total += 2.0 * (-1.0) ** m * lambda_n(h, m) * gamma_pair(s, m * T1)
    total += lambda_n(h, 0) * gamma_pair(s, 0.0)
    gamma_2s = gamma_complex(2.0 * s).real
    prefactor = 1.0 / (
        float(h) ** s * 2.0 ** (1.0 - 3.0 * s) * LOG_UNIT * gamma_2s
    )
    tail = 4.0 * gamma_pair(s, (m_max + 1) * T1) / abs(
        2.0 ** (1.0 - 3.0 * s) * LOG_UNIT
    )
    return SeriesValue(prefactor * total, {"m_max": m_max, "h": h}, tail)


def verify_single(
    h: int,
    s: float,
    rel_tol: float = 1e-6,
    b_max: int | None = None,
    m_max: int = 16,
) -> IdentityReport:
    """Evaluate both sides of the single-series identity and compare."""
    lhs = dh_lhs(h, s, b_max)
    rhs = dh_rhs(h, s, m_max)
    return _report({"h": h, "s": s}, lhs, rhs, rel_tol)


def dds_lhs(
    s: float, w: float, h_max: int = 10**6, abs_cut: float = 1e-18
) -> SeriesValue:
    """sum over coprime (m, h) of r1(h) r1(m) r1(2m - h) / (m^s h^w).

    Supported on h = a^2 (outer loop over a) and Pell solutions
    c^2 - 2 b^2 = -a^2 with gcd(a, b) = 1; deterministic order, ascending h
    then b, summed with compensated addition.
    """
    if s + w < 3:
        raise ValueError("dds_lhs requires s + w >= 3")
    terms: list[float] = []
    a_hi = math.isqrt(h_max)
    for a in range(1, a_hi + 1):
        # largest b worth visiting for this column at the per-term cutoff
        b_cut = int((8.0 / (abs_cut * float(a) ** (2.0 * w))) ** (1.0 / (2.0 * s))) + 1
        if b_cut < 1:
            break
        aw = float(a) ** (-2.0 * w)
        for c, b in pell_solutions(a * a, b_cut):
            if math.gcd(a, b) != 1:
                continue
            terms.append(
                4.0 * (2.0 if c > 0 else 1.0) * float(b) ** (-2.0 * s) * aw
            )
    value = math.fsum(terms)
    tail = float(a_hi) ** (1.0 - 2.0 * (s + w)) + abs_cut * max(1, len(terms))
    return SeriesValue(value, {"h_max": h_max, "abs_cut": abs_cut}, tail)


def dds_rhs(
    s: float,
    w: float,
    m_max: int = 12,
    prime_bound: int = 10**6,
) -> SeriesValue:
    """The Hecke L-function side of the double-series identity.

    2^(3s) (1 - 2^(-2s-2w)) / (zeta^(2)(4s+4w) log(1+sqrt2) Gamma(2s))
    * sum_{m in Z} (-1)^m L(2s+2w, eta^(2m)) Gamma(s + i t_m) Gamma(s - i t_m).
    """
    if s < 1:
        raise ValueError("dds_rhs requires s >= 1")
    sw = 2.0 * (s + w)
    if sw < 3:
        raise ValueError("dds_rhs requires 2s + 2w >= 3")
    total = 0.0
    tail = 0.0
    for m in range(m_max, 0, -1):
        lv = hecke_L(sw, 2 * m, prime_bound)
        total += 2.0 * (-1.0) ** m * lv.value * gamma_pair(s, m * T1)
        tail += 2.0 * lv.tail_estimate * gamma_pair(s, m * T1)
    l0 = hecke_L(sw, 0, prime_bound)
    total += l0.value * gamma_pair(s, 0.0)
    tail += l0.tail_estimate * gamma_pair(s, 0.0)
    gamma_2s = gamma_complex(2.0 * s).real
    prefactor = (
        2.0 ** (3.0 * s)
        * (1.0 - 2.0 ** (-sw))
        / (zeta2_factor(2.0 * sw) * LOG_UNIT * gamma_2s)
    )
    tail = prefactor * (tail + 4.0 * gamma_pair(s, (m_max + 1) * T1))
    return SeriesValue(
        prefactor * total,
        {"m_max": m_max, "prime_bound": prime_bound},
        tail,
    )


def verify_double(
    s: float,
    w: float,
    rel_tol: float = 1e-5,
    h_max: int = 10**6,
    m_max: int = 12,
    prime_bound: int = 10**6,
) -> IdentityReport:
    """Evaluate both sides of the double-series identity and compare."""
    lhs = dds_lhs(s, w, h_max)
    rhs = dds_rhs(s, w, m_max, prime_bound)
    return _report({"s": s, "w": w}, lhs, rhs, rel_tol)


def h_sum_lhs(m: int, s: float = 3.0, h_max: int = 10**5) -> SeriesValue:
    """sum_{h <= h_max} lambda_m(h^2) / h^s, via a smallest-prime-factor sieve."""
    spf = smallest_prime_factors(h_max)
    lam_sq = [0.0] * (h_max + 1)  # lambda_m(h^2)
    lam_sq[1] = 1.0
    ppow_cache: dict[tuple[int, int], float] = {}
    terms = []
    for h in range(2, h_max + 1):
        p = int(spf[h])
        rest = h
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        key = (p, e)
        if key not in ppow_cache:
            ppow_cache[key] = _lambda_prime_power(p, 2 * e, m)
        lam_sq[h] = lam_sq[rest] * ppow_cache[key]
    for h in range(1, h_max + 1):
        terms.append(lam_sq[h] / float(h) ** s)
    # crude divisor-bound tail: |lambda_m(h^2)| <= d(h^2)
    tail = 20.0 * float(h_max) ** (1.0 - s)
    return SeriesValue(math.fsum(terms), {"h_max": h_max}, tail)


def h_sum_rhs(m: int, s: float = 3.0, prime_bound: int = 10**6) -> SeriesValue:
    """zeta^(2)(s) L(s, eta^(2m)) / zeta^(2)(2s)."""
    lv = hecke_L(s, 2 * m, prime_bound)
    value = zeta2_factor(s) * lv.value / zeta2_factor(2.0 * s)
    return SeriesValue(value, lv.truncation, lv.tail_estimate)


def verify_h_sum(
    m: int,
    s: float = 3.0,
    h_max: int = 10**5,
    prime_bound: int = 10**6,
    rel_tol: float = 1e-6,
) -> IdentityReport:
    """Check sum_h lambda_m(h^2)/h^s = zeta^(2)(s) L(s, eta^(2m)) / zeta^(2)(2s)."""
    lhs = h_sum_lhs(m, s, h_max)
    rhs = h_sum_rhs(m, s, prime_bound)
    return _report({"m": m, "s": s}, lhs, rhs, rel_tol)
