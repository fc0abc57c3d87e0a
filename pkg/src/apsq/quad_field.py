"""Arithmetic in Z[sqrt(2)]: norms, units, prime splitting, Pell-type norm
equations, the sign-times-regulator Hecke character, and the dihedral Hecke
eigenvalues lambda_m(n) built from it."""

from __future__ import annotations

import cmath
import math
import threading
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

import numpy as np

from .arith_core import chi8, factorize, is_prime, is_square, primes_up_to

__all__ = [
    "SQRT2",
    "LOG_UNIT",
    "T1",
    "QuadInt",
    "PrimeSplit",
    "DihedralIndex",
    "PellOrbit",
    "qmul",
    "qnorm",
    "qconj",
    "spectral_param",
    "split_prime",
    "split_data_up_to",
    "eta_power",
    "lambda_prime",
    "lambda_n",
    "pell_solutions",
]

SQRT2 = math.sqrt(2.0)
#: regulator of Z[sqrt(2)]: log of the fundamental unit 1 + sqrt(2)
LOG_UNIT = math.log(1.0 + SQRT2)
#: base spectral parameter pi / (2 log(1 + sqrt(2)))
T1 = math.pi / (2.0 * LOG_UNIT)


@dataclass(frozen=True)
class QuadInt:
    """Element a + b*sqrt(2) of Z[sqrt(2)]."""

    a: int
    b: int

    def __mul__(self, other: "QuadInt") -> "QuadInt":
        return QuadInt(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def __neg__(self) -> "QuadInt":
        return QuadInt(-self.a, -self.b)

    def __sub__(self, other: "QuadInt") -> "QuadInt":
        return QuadInt(self.a - other.a, self.b - other.b)

    def norm(self) -> int:
        return self.a * self.a - 2 * self.b * self.b

    def conj(self) -> "QuadInt":
        return QuadInt(self.a, -self.b)

    def __str__(self) -> str:
        return f"{self.a}{self.b:+d}*sqrt(2)"


#: fundamental unit 1 + sqrt(2), norm -1
UNIT = QuadInt(1, 1)
#: its square 3 + 2 sqrt(2), norm +1
UNIT_SQ = QuadInt(3, 2)


def qmul(x: QuadInt, y: QuadInt) -> QuadInt:
    return x * y


def qnorm(x: QuadInt) -> int:
    return x.norm()


def qconj(x: QuadInt) -> QuadInt:
    return x.conj()


def _qdivmod(x: QuadInt, y: QuadInt) -> tuple[QuadInt, QuadInt]:
    """Nearest-integer division in the norm-Euclidean ring Z[sqrt(2)]."""
    n = y.norm()
    if n == 0:
        raise ZeroDivisionError("division by zero in Z[sqrt(2)]")
    num = x * y.conj()
    qa = (2 * num.a + n) // (2 * n) if n > 0 else -((-2 * num.a + -n) // (2 * -n))
    qb = (2 * num.b + n) // (2 * n) if n > 0 else -((-2 * num.b + -n) // (2 * -n))
    # round-half-away rounding is not critical; correct any drift exactly
    q = QuadInt(qa, qb)
    r = x - q * y
    if abs(r.norm()) >= abs(n):
        best = None
        for da in (-1, 0, 1):
            for db in (-1, 0, 1):
                cand = QuadInt(qa + da, qb + db)
                rr = x - cand * y
                if best is None or abs(rr.norm()) < abs(best[1].norm()):
                    best = (cand, rr)
        q, r = best
    return q, r


def _qgcd(x: QuadInt, y: QuadInt) -> QuadInt:
    while y.norm() != 0:
        _, r = _qdivmod(x, y)
        x, y = y, r
    return x


def _sqrt_2_mod_p(p: int) -> int:
    """A square root of 2 modulo a prime p with p = +-1 mod 8 (Tonelli-Shanks)."""
    if p % 8 == 7:
        return pow(2, (p + 1) // 4, p)
    # p = 1 mod 8: Tonelli-Shanks
    q = p - 1
    s = 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(2, q, p), pow(2, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


@dataclass(frozen=True)
class PrimeSplit:
    """Splitting data of a rational prime in Z[sqrt(2)].

    theta is the angle of the unitary character value at the chosen prime
    ideal above p; the choice of ideal versus its conjugate flips the sign of
    theta, which no downstream consumer (a cosine) can see.
    """

    p: int
    kind: str  # "split" | "inert" | "ramified"
    generator: Optional[QuadInt]
    theta: float


@dataclass(frozen=True)
class DihedralIndex:
    """Character power m with its spectral parameter m*pi / (2 log(1+sqrt 2))."""

    m: int
    t_m: float = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "t_m", spectral_param(self.m))


def spectral_param(m: int) -> float:
    """t_m = m*pi / (2 log(1 + sqrt 2))."""
    return m * T1


def _canonical_generator(g: QuadInt, p: int) -> QuadInt:
    """Canonicalize a generator of a prime ideal of norm +-p.

    Returns the (x, y) with x, y > 0 and minimal y among |x^2 - 2y^2| = p,
    preferring norm +p when both signs occur at that y.
    """
    # walk the unit orbit +-eps^k g to the minimal |b|; |b_k| is unimodal in k
    cur = g
    while True:
        up = cur * UNIT
        dn = cur * QuadInt(-1, 1)  # times eps^-1
        best = min((abs(cur.b), 0), (abs(up.b), 1), (abs(dn.b), 2))
        if best[1] == 0:
            break
        cur = up if best[1] == 1 else dn
    y = abs(cur.b)
    x = is_square(2 * y * y + p)
    if x is None:
        x = is_square(2 * y * y - p)
    if x is None or y == 0:
        raise AssertionError(f"generator reduction failed for p={p}")
    return QuadInt(x, y)


def _theta_of_generator(x: int, y: int, p: int) -> float:
    """Hecke angle of the ideal generated by x + y sqrt(2), |norm| = p, x,y>0.

    eta((x+y sqrt 2)) = s * exp(i * T1 * log R) with s the product of the
    real-embedding signs and R = (x + y sqrt 2)^2 / p.
    """
    log_r = 2.0 * math.log(x + y * SQRT2) - math.log(p)
    theta = T1 * log_r
    if x * x - 2 * y * y < 0:
        theta += math.pi
    return math.remainder(theta, 2.0 * math.pi)


@lru_cache(maxsize=1 << 18)
def split_prime(p: int) -> PrimeSplit:
    """Splitting type, canonical generator, and Hecke angle for a prime p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return PrimeSplit(2, "ramified", QuadInt(0, 1), math.pi)
    c = chi8(p)
    if c == -1:
        return PrimeSplit(p, "inert", None, 0.0)
    u = _sqrt_2_mod_p(p)
    g = _qgcd(QuadInt(p, 0), QuadInt(u, -1))
    if abs(g.norm()) != p:
        raise AssertionError(f"ideal gcd failed for p={p}")
    gen = _canonical_generator(g, p)
    return PrimeSplit(p, "split", gen, _theta_of_generator(gen.a, gen.b, p))


_split_table_lock = threading.Lock()
_split_table_cache: dict[int, tuple[np.ndarray, np.ndarray, np.ndarray]] = {}


def split_data_up_to(bound: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Arrays (primes, kinds, thetas) for all primes <= bound.

    kind codes: 0 ramified, 1 split, -1 inert.  Results are cached; the cache
    is read-mostly and idempotent, so concurrent use is safe.
    """
    with _split_table_lock:
        for b, data in _split_table_cache.items():
            if b >= bound:
                ps = data[0]
                cut = int(np.searchsorted(ps, bound, side="right"))
                return ps[:cut], data[1][:cut], data[2][:cut]
    ps = primes_up_to(bound)
    kinds = np.zeros(len(ps), dtype=np.int8)
    thetas = np.zeros(len(ps), dtype=np.float64)
    for i, p in enumerate(ps):
        sp = split_prime(int(p))
        kinds[i] = {"ramified": 0, "split": 1, "inert": -1}[sp.kind]
        thetas[i] = sp.theta
    with _split_table_lock:
        _split_table_cache[bound] = (ps, kinds, thetas)
    return ps, kinds, thetas


def eta_power(x: QuadInt, m: int) -> complex:
    """The Hecke character power eta^m evaluated on the principal ideal (x).

    eta((a + b sqrt 2)) = sgn(a + b sqrt 2) sgn(a - b sqrt 2)
    * |(a + b sqrt 2)/(a - b sqrt 2)|^(i pi / (2 log(1+sqrt 2))).
    Invariant (up to floating tolerance) under x -> unit * x.
    """
    n = x.norm()
    if n == 0:
        raise ValueError("eta_power requires a nonzero element")
    # log |a + b sqrt2| computed stably: switch to |norm|/|a - b sqrt2| when
    # the direct embedding cancels catastrophically
    plus = x.a + x.b * SQRT2
    minus = x.a - x.b * SQRT2
    scale = abs(x.a) + abs(x.b) * SQRT2
    if abs(plus) > 1e-6 * scale:
        log_plus = math.log(abs(plus))
    else:
        log_plus = math.log(abs(n)) - math.log(abs(minus))
    log_r = 2.0 * log_plus - math.log(abs(n))
    sign = -1.0 if n < 0 else 1.0
    return sign ** (m % 2) * cmath.exp(1j * m * T1 * log_r)


def lambda_prime(p: int, m: int) -> float:
    """Hecke eigenvalue at a prime: 2 cos(m theta_p) split, 0 inert, (-1)^m at 2."""
    sp = split_prime(p)
    if sp.kind == "inert":
        return 0.0
    if sp.kind == "ramified":
        return -1.0 if m % 2 else 1.0
    return 2.0 * math.cos(m * sp.theta)


def _lambda_prime_power(p: int, e: int, m: int) -> float:
    """lambda_m(p^e) by the Hecke recurrence with character chi8 (chi(2) = 0)."""
    lp = lambda_prime(p, m)
    chi = chi8(p)
    prev, cur = 1.0, lp
    for _ in range(e - 1):
        prev, cur = cur, lp * cur - chi * prev
    return cur if e >= 1 else 1.0


def lambda_n(n: int, m: int) -> float:
    """Hecke eigenvalue lambda_m(n), multiplicative over prime powers."""
    if n < 1:
        raise ValueError("lambda_n requires n >= 1")
    out = 1.0
    for p, e in factorize(n):
        out *= _lambda_prime_power(p, e, m)
    return out


@dataclass
class PellOrbit:
    """Solutions of c^2 - 2 b^2 = -h with 0 <= c, 1 <= b <= b_max.

    Closed under multiplication by the norm-one unit 3 + 2 sqrt(2) (within
    the bound).  ``fundamentals`` are the orbit seeds found by direct scan
    over b <= sqrt(h)."""

    h: int
    b_max: int
    fundamentals: list[QuadInt]
    solutions: list[tuple[int, int]]  # (c, b), sorted by b

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.solutions)


def _pell_scan(h: int, b_lo: int, b_hi: int) -> list[tuple[int, int]]:
    """Direct scan: all (c, b) with c^2 = 2 b^2 - h, b_lo <= b <= b_hi."""
    if b_hi < b_lo:
        return []
    out: list[tuple[int, int]] = []
    if b_hi - b_lo < 4096:
        for b in range(b_lo, b_hi + 1):
            t = 2 * b * b - h
            if t < 0:
                continue
            c = is_square(t)
            if c is not None:
                out.append((c, b))
        return out
    # vectorized scan; exact because candidates are re-verified in integers
    bs = np.arange(b_lo, b_hi + 1, dtype=np.int64)
    ts = 2 * bs * bs - h
    mask = ts >= 0
    roots = np.sqrt(ts[mask].astype(np.float64)).astype(np.int64)
    for b, t, r0 in zip(bs[mask], ts[mask], roots):
        for c in (r0 - 1, r0, r0 + 1):
            if c >= 0 and c * c == t:
                out.append((int(c), int(b)))
                break
    return out


def pell_solutions(h: int, b_max: int, mode: str = "auto") -> PellOrbit:
    """All (c, b) with c^2 - 2 b^2 = -h, 0 <= c, 1 <= b <= b_max.

    mode "scan" checks every b directly; mode "orbit" scans b <= sqrt(h) for
    fundamentals and grows them by 3 + 2 sqrt(2), which is exact and fast for
    large bounds.  "auto" picks orbit beyond b_max = 10^5.
    """
    if h < 1 or b_max < 1:
        raise ValueError("pell_solutions requires h >= 1 and b_max >= 1")
    if mode not in ("auto", "scan", "orbit"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "auto":
        mode = "orbit" if b_max > 10**5 else "scan"

    b_fund = math.isqrt(h) + 1
    fundamentals = [
        QuadInt(c, b) for (c, b) in _pell_scan(h, 1, min(b_fund, b_max))
    ]
    if mode == "scan":
        sols = _pell_scan(h, 1, b_max)
        return PellOrbit(h, b_max, fundamentals, sols)

    seen: set[tuple[int, int]] = set()
    for f in fundamentals:
        for seed in (f, QuadInt(-f.a, f.b)):
            x = seed
            while x.b <= b_max:
                seen.add((abs(x.a), x.b))
                x = x * UNIT_SQ
    sols = sorted(seen, key=lambda cb: cb[1])
    return PellOrbit(h, b_max, fundamentals, sols)
