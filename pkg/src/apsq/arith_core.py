"""Elementary multiplicative functions: square tests, r1/r2, the mod-8 and
mod-4 real characters, twisted divisor sums, and the primitive point count
A(n) for the circle x^2 + y^2 = 2."""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Optional

import numpy as np

__all__ = [
    "BudgetExceededError",
    "is_square",
    "r1",
    "r2",
    "chi8",
    "chi4",
    "sigma0_chi",
    "primitive_point_count_A",
    "A_series_coefficient",
    "factorize",
    "divisors",
    "mobius",
    "is_prime",
    "primes_up_to",
    "smallest_prime_factors",
    "A_series_coefficients",
    "primitive_point_counts",
]


class BudgetExceededError(RuntimeError):
    """Raised when factorization exceeds the trial-division/Pollard-rho budget."""


def is_square(n: int) -> Optional[int]:
    """Return the nonnegative root if n is a perfect square, else None.

    Exact for arbitrary Python integers (math.isqrt, no floating point).
    """
    if n < 0:
        raise ValueError("is_square requires n >= 0")
    r = math.isqrt(n)
    return r if r * r == n else None


def r1(n: int) -> int:
    """Number of x in Z with x^2 = n: 1 for n = 0, 2 for positive squares, else 0."""
    if n < 0:
        raise ValueError("r1 requires n >= 0")
    if n == 0:
        return 1
    return 2 if is_square(n) is not None else 0


def chi8(d: int) -> int:
    """The Kronecker symbol (2/d): +1 for d = +-1 mod 8, -1 for d = +-3 mod 8, 0 for even d."""
    r = d % 8
    if r in (1, 7):
        return 1
    if r in (3, 5):
        return -1
    return 0


def chi4(d: int) -> int:
    """The Kronecker symbol (-1/d): +1 for d = 1 mod 4, -1 for d = 3 mod 4, 0 for even d."""
    r = d % 4
    if r == 1:
        return 1
    if r == 3:
        return -1
    return 0


# --------------------------------------------------------------------------
# Factorization: trial division by sieved primes, then Pollard rho with a
# deterministic Miller-Rabin check.  Inputs stay below ~10^16 at desk scale.
# --------------------------------------------------------------------------

_TRIAL_BOUND = 10**6
_RHO_BUDGET = 10**6

# Witnesses sufficient for a deterministic test below 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def primes_up_to(n: int) -> np.ndarray:
    """All primes <= n, as an int64 array (simple numpy sieve)."""
    if n < 2:
        return np.empty(0, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.nonzero(sieve)[0].astype(np.int64)


def smallest_prime_factors(n: int) -> np.ndarray:
    """Array spf with spf[k] = smallest prime factor of k for 2 <= k <= n."""
    spf = np.zeros(n + 1, dtype=np.int64)
    if n >= 1:
        spf[1] = 1
    for p in range(2, n + 1):
        if spf[p] == 0:
            view = spf[p::p]
            view[view == 0] = p
    return spf


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """One nontrivial factor of composite odd n, Brent variant."""
    if n % 2 == 0:
        return 2
    for c in range(1, 40):
        x = y = 2
        d = 1
        steps = 0
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
            steps += 1
            if steps > _RHO_BUDGET:
                break
        if d != n and d != 1:
            return d
    raise BudgetExceededError(f"factorization budget exceeded for n={n}")


@lru_cache(maxsize=1 << 18)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as a sorted tuple of (p, exponent)."""
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    factors: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    p = 7
    # trial division with a 2,4-wheel-ish step; cheap since n <= ~10^16
    step = 4
    while p * p <= n and p <= _TRIAL_BOUND:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += step
        step = 6 - step
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return tuple(sorted(factors.items()))


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def mobius(n: int) -> int:
    """Moebius function."""
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def r2(n: int) -> int:
    """Number of (x, y) in Z^2 with x^2 + y^2 = n.

    Computed from the factorization: r2(n)/4 = prod (e_p + 1) over p = 1 mod 4,
    zero if any prime p = 3 mod 4 divides n to an odd power.
    """
    if n < 0:
        raise ValueError("r2 requires n >= 0")
    if n == 0:
        return 1
    out = 4
    for p, e in factorize(n):
        if p == 2:
            continue
        if p % 4 == 1:
            out *= e + 1
        elif e % 2 == 1:
            return 0
    return out


def sigma0_chi(h: int) -> int:
    """Twisted divisor sum sum_{d | h} chi8(d)."""
    if h < 1:
        raise ValueError("sigma0_chi requires h >= 1")
    out = 1
    for p, e in factorize(h):
        c = chi8(p)
        if c == 1:
            out *= e + 1
        elif c == -1:
            if e % 2 == 1:
                return 0
        # chi8(2) = 0: the p = 2 local factor is 1
    return out


def primitive_point_count_A(n: int) -> int:
    """A(n): rational points (a/n, c/n) on x^2 + y^2 = 2 in lowest terms.

    Moebius inversion of sum_{d | n} A(d) = r2(n^2) over the divisors of n.
    """
    if n < 1:
        raise ValueError("primitive_point_count_A requires n >= 1")
    return sum(mobius(n // d) * r2(d * d) for d in divisors(n))


# Dirichlet coefficient sequences of the four Euler factors of
# 4 zeta(s) L(s, chi4) / ((1 + 2^-s) zeta(2s)):
#   zeta(s)          -> 1 at every n
#   L(s, chi4)       -> chi4(n)
#   (1 + 2^-s)^-1    -> (-1)^k at n = 2^k, else 0
#   zeta(2s)^-1      -> mu(d) at n = d^2, else 0


def _inv_two_factor_coeff(n: int) -> int:
    k = 0
    while n % 2 == 0:
        n //= 2
        k += 1
    if n != 1:
        return 0
    return -1 if k % 2 else 1


def A_series_coefficient(n: int) -> int:
    """The n-th Dirichlet coefficient of 4 zeta(s) L(s, chi4) / ((1+2^-s) zeta(2s)).

    Computed by Dirichlet convolution of the four factor sequences; agrees
    with primitive_point_count_A for every n.
    """
    if n < 1:
        raise ValueError("A_series_coefficient requires n >= 1")
    total = 0
    for d in divisors(n):  # d carries the (1+2^-s)^-1 factor
        c2 = _inv_two_factor_coeff(d)
        if c2 == 0:
            continue
        m = n // d
        for e in divisors(m):  # e^2 carries the zeta(2s)^-1 factor
            if m % (e * e) != 0:
                continue
            mu = mobius(e)
            if mu == 0:
                continue
            k = m // (e * e)
            # (zeta * L(chi4))(k) = sum_{t | k} chi4(t)
            s = sum(chi4(t) for t in divisors(k))
            total += c2 * mu * s
    return 4 * total


# --------------------------------------------------------------------------
# Bulk variants for the n <= 10^6 consistency sweep.  These vectorize the
# same two formulas over a full range; the per-n functions above stay the
# reference implementations.
# --------------------------------------------------------------------------


def A_series_coefficients(n_max: int) -> np.ndarray:
    """A_series_coefficient(n) for all 1 <= n <= n_max (index 0 unused)."""
    # (zeta * L(chi4))(n) = sum_{d | n} chi4(d)
    base = np.zeros(n_max + 1, dtype=np.int64)
    for d in range(1, n_max + 1, 2):
        base[d::d] += 1 if d % 4 == 1 else -1
    # multiply by (1 + 2^-s)^-1: support on powers of two
    out = base.copy()
    k = 1
    sign = -1
    while (1 << k) <= n_max:
        step = 1 << k
        out[step::step] += sign * base[1 : n_max // step + 1]
        sign = -sign
        k += 1
    # multiply by zeta(2s)^-1: support mu(e) at e^2
    final = out.copy()
    for e in range(2, math.isqrt(n_max) + 1):
        mu = mobius(e)
        if mu == 0:
            continue
        sq = e * e
        final[sq::sq] += mu * out[1 : n_max // sq + 1]
    final[0] = 0
    return 4 * final


def primitive_point_counts(n_max: int) -> np.ndarray:
    """primitive_point_count_A(n) for all 1 <= n <= n_max (index 0 unused).

    Same Moebius inversion of d -> r2(d^2) as the scalar routine, run as a
    sieve: r2(k^2)/4 and mu(e) come from a smallest-prime-factor table.
    """
    spf = smallest_prime_factors(n_max)
    r2sq = np.zeros(n_max + 1, dtype=np.int64)  # r2(k^2)/4
    mu = np.zeros(n_max + 1, dtype=np.int64)
    r2sq[1] = 1
    mu[1] = 1
    for k in range(2, n_max + 1):
        p = spf[k]
        m = k
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        r2sq[k] = r2sq[m] * (2 * e + 1 if p % 4 == 1 else 1)
        mu[k] = 0 if e > 1 else -mu[m]
    out = np.zeros(n_max + 1, dtype=np.int64)
    for e in range(1, n_max + 1):
        if mu[e]:
            out[e::e] += mu[e] * r2sq[1 : n_max // e + 1]
    return 4 * out
