"""Numerical special functions and L-functions: Hurwitz zeta, Dirichlet
L-functions for the mod-8 and mod-4 real characters, the 2-deprived zeta,
Hecke L-functions of even character powers via Euler products, the complex
Gamma function, and the fixed Gauss hypergeometric value used by the
bounded-product count."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

import mpmath
import numpy as np

from .quad_field import split_data_up_to

__all__ = [
    "SeriesValue",
    "hurwitz_zeta",
    "dirichlet_L",
    "zeta2_factor",
    "hecke_L",
    "gamma_complex",
    "gamma_pair",
    "gauss_2f1_quarterhalf",
]


@dataclass(frozen=True)
class SeriesValue:
    """A numerically evaluated series with its truncation bookkeeping."""

    value: float
    truncation: dict[str, Any] = field(default_factory=dict)
    tail_estimate: float = 0.0

    def __float__(self) -> float:
        return self.value


def hurwitz_zeta(s: float, x: float) -> float:
    """zeta(s, x) for s > 0, s != 1, x in (0, 1]; absolute accuracy ~1e-12.

    Backed by mpmath at elevated working precision.
    """
    if s == 1:
        raise ValueError("hurwitz zeta has a pole at s = 1")
    if s <= 0:
        raise ValueError("hurwitz_zeta requires s > 0")
    if not 0 < x <= 1:
        raise ValueError("hurwitz_zeta requires x in (0, 1]")
    with mpmath.workdps(30):
        return float(mpmath.zeta(s, x))


_CHARACTERS = {
    # name -> (modulus, {residue: value})
    "chi8": (8, {1: 1, 3: -1, 5: -1, 7: 1}),
    "chi4": (4, {1: 1, 3: -1}),
    "principal8": (8, {1: 1, 3: 1, 5: 1, 7: 1}),
}


def dirichlet_L(s: float, which: str) -> SeriesValue:
    """L(s, chi) as the exact finite character sum of Hurwitz zetas.

    which is one of "chi8", "chi4", "principal8".  Valid for s > 0, except
    at the s = 1 pole of the principal character.
    """
    if which not in _CHARACTERS:
        raise ValueError(f"unknown character {which!r}")
    q, values = _CHARACTERS[which]
    if s == 1:
        if which == "principal8":
            raise ValueError("principal character L-function has a pole at s = 1")
        # the Hurwitz poles cancel; take the digamma limit instead
        with mpmath.workdps(30):
            total = -math.fsum(
                v * float(mpmath.digamma(mpmath.mpf(a) / q))
                for a, v in values.items()
            )
        return SeriesValue(total / q, {"method": "digamma", "q": q}, 1e-12)
    total = math.fsum(
        v * hurwitz_zeta(s, a / q) for a, v in values.items()
    )
    return SeriesValue(q ** (-s) * total, {"method": "hurwitz", "q": q}, 1e-12)


def zeta2_factor(s: float) -> float:
    """The 2-deprived zeta (1 - 2^-s) * zeta(s), for s > 1."""
    if s <= 1:
        raise ValueError("zeta2_factor requires s > 1")
    return (1.0 - 2.0 ** (-s)) * hurwitz_zeta(s, 1.0)


def hecke_L(s: float, m2: int, prime_bound: int) -> SeriesValue:
    """L(s, eta^m2) for even m2, by Euler product over p <= prime_bound.

    Local factors: split p, (1 - 2 cos(m2 theta_p) p^-s + p^-2s)^-1;
    inert p, (1 - p^-2s)^-1; p = 2, (1 - 2^-s)^-1 (even powers of the
    character are trivial on the ramified ideal).  Requires s >= 1.5, where
    the product converges comfortably; no analytic continuation.
    """
    if m2 % 2 != 0:
        raise ValueError("hecke_L takes an even character power m2 = 2m")
    if s < 1.5:
        raise ValueError("hecke_L requires s >= 1.5 (Euler product regime)")
    primes, kinds, thetas = split_data_up_to(prime_bound)
    x = np.power(primes.astype(np.float64), -s)
    split = kinds == 1
    inert = kinds == -1
    log_value = 0.0
    log_value -= float(
        np.sum(np.log1p(-2.0 * np.cos(m2 * thetas[split]) * x[split] + x[split] ** 2))
    )
    log_value -= float(np.sum(np.log1p(-(x[inert] ** 2))))
    log_value -= math.log1p(-(2.0**-s))  # ramified factor
    # heuristic prime-sum tail bound: sum_{p > P} 2 p^-s
    tail = 2.0 * prime_bound ** (1.0 - s) / ((s - 1.0) * math.log(prime_bound))
    return SeriesValue(
        math.exp(log_value), {"prime_bound": prime_bound, "s": s, "m2": m2}, tail
    )


# Lanczos approximation, g = 7, 9 terms
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma_complex(z: complex) -> complex:
    """Gamma(z) by Lanczos approximation, reflection for Re z < 1/2."""
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0 and z.real == int(z.real):
        raise ValueError(f"gamma pole at z = {z.real}")
    if z.real < 0.5:
        # Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return math.pi / (cmath.sin(math.pi * z) * gamma_complex(1.0 - z))
    z -= 1.0
    acc = _LANCZOS_COEF[0]
    for i, c in enumerate(_LANCZOS_COEF[1:], start=1):
        acc += c / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * cmath.exp(-t) * acc


def gamma_pair(s: float, t: float) -> float:
    """Gamma(s + it) Gamma(s - it) for real s > 0, real t: equals |Gamma(s+it)|^2."""
    return abs(gamma_complex(complex(s, t))) ** 2


def gauss_2f1_quarterhalf(tol: float = 1e-15, max_terms: int = 200) -> float:
    """2F1(1/4, 1/2; 5/4; 1/2) by its power series; geometric at z = 1/2."""
    a, b, c = 0.25, 0.5, 1.25
    term = 1.0
    total = 0.0
    for n in range(max_terms):
        total += term
        ratio = (a + n) * (b + n) / ((c + n) * (n + 1.0)) * 0.5
        term *= ratio
        if term < tol * total:
            total += term / (1.0 - ratio)  # geometric tail touch-up
            break
    return total


@lru_cache(maxsize=1)
def hypergeom_product_constant() -> float:
    """The bounded-product main-term constant 2 sqrt(2)/pi^2 * 2F1(1/4,1/2;5/4;1/2)."""
    return 2.0 * math.sqrt(2.0) / math.pi**2 * gauss_2f1_quarterhalf()
