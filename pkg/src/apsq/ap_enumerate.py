"""Exact enumeration of primitive three-term arithmetic progressions of
squares under the four counting regions, the brute-force oracle, asymptotic
main terms, scan reports, and the rational-point and right-triangle counts
derived from the same parametrization."""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Optional, Union

from . import _kernels
from .arith_core import is_square, primitive_point_count_A
from .lfun_special import hypergeom_product_constant
from .quad_field import LOG_UNIT

__all__ = [
    "ApTriple",
    "RatioBound",
    "MaxBound",
    "Rect",
    "ProductBound",
    "Region",
    "CountReport",
    "OracleBudgetError",
    "enumerate_aps",
    "brute_oracle",
    "count_region",
    "main_term",
    "scan",
    "equidist_ratio",
    "rational_point_sum",
    "right_triangles",
    "RightTriangleReport",
]

MAX_BOUND = 10**16
_ORACLE_B_LIMIT = 10**4


class OracleBudgetError(ValueError):
    """The brute-force oracle is deliberately small-scale; bound too large."""


@dataclass(frozen=True)
class ApTriple:
    """A primitive AP of squares {a^2, b^2, c^2} with a <= b <= c."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.a * self.a + self.c * self.c != 2 * self.b * self.b:
            raise ValueError(f"not an AP of squares: {self}")

    @property
    def trivial(self) -> bool:
        return self.a == self.b == self.c == 1

    def to_triangle(self) -> tuple[int, int, int]:
        """The right triangle (c - a, c + a, 2b) with area b^2 - a^2."""
        return (self.c - self.a, self.c + self.a, 2 * self.b)

    @staticmethod
    def from_triangle(alpha: int, beta: int, gamma: int) -> "ApTriple":
        """Inverse map ((beta - alpha)/2, gamma/2, (beta + alpha)/2)."""
        if alpha > beta:
            alpha, beta = beta, alpha
        return ApTriple((beta - alpha) // 2, gamma // 2, (beta + alpha) // 2)


@dataclass(frozen=True)
class RatioBound:
    """b^2 <= x and a^2 <= delta * b^2 (exact rational comparison)."""

    x: int
    delta: Fraction

    def __post_init__(self) -> None:
        if not 0 <= self.delta <= 1:
            raise ValueError("delta must lie in [0, 1]")
        _check_bound(self.x)

    def admits(self, t: ApTriple) -> bool:
        return (
            t.b * t.b <= self.x
            and t.a * t.a * self.delta.denominator <= self.delta.numerator * t.b * t.b
        )


@dataclass(frozen=True)
class MaxBound:
    """c^2 <= x."""

    x: int

    def __post_init__(self) -> None:
        _check_bound(self.x)

    def admits(self, t: ApTriple) -> bool:
        return t.c * t.c <= self.x


@dataclass(frozen=True)
class Rect:
    """a^2 <= y and b^2 <= x, with y <= x."""

    x: int
    y: int

    def __post_init__(self) -> None:
        _check_bound(self.x)
        if self.y > self.x:
            raise ValueError("Rect requires y <= x")

    def admits(self, t: ApTriple) -> bool:
        return t.a * t.a <= self.y and t.b * t.b <= self.x


@dataclass(frozen=True)
class ProductBound:
    """a * b <= x."""

    x: int

    def __post_init__(self) -> None:
        _check_bound(self.x)

    def admits(self, t: ApTriple) -> bool:
        return t.a * t.b <= self.x


Region = Union[RatioBound, MaxBound, Rect, ProductBound]


def _check_bound(x: int) -> None:
    if x < 0 or x > MAX_BOUND:
        raise ValueError(f"region bound must lie in [0, {MAX_BOUND}]")


@dataclass(frozen=True)
class CountReport:
    """Exact count against the asymptotic main term for one region."""

    theorem: str
    region: Region
    count: int
    includes_trivial: bool
    main_term: float
    abs_error: float
    rel_error: float
    elapsed: float


@dataclass(frozen=True)
class RightTriangleReport:
    count: int
    main_term: float
    abs_error: float
    rel_error: float


def _pair_bounds(region: Region) -> int:
    """Exclusive upper bound for u in the (u, v) parametrization."""
    if isinstance(region, ProductBound):
        # a*b >= b > u^2
        return math.isqrt(region.x) + 1
    # b and c are both > u^2
    return math.isqrt(math.isqrt(region.x)) + 1


def enumerate_aps(region: Region, include_trivial: bool = True) -> Iterator[ApTriple]:
    """Generate the primitive APs admitted by the region, each exactly once.

    Nontrivial APs come from coprime (u, v), u > v >= 1, u + v odd, via
    b = u^2 + v^2, a = |u^2 - v^2 - 2uv|, c = u^2 - v^2 + 2uv; the trivial
    AP (1, 1, 1) is appended when requested and admitted.
    """
    trivial = ApTriple(1, 1, 1)
    if include_trivial and region.admits(trivial):
        yield trivial
    for u in range(2, _pair_bounds(region)):
        uu = u * u
        if isinstance(region, ProductBound) and uu > region.x:
            break
        for v in range(1 + (u % 2), u, 2):
            if math.gcd(u, v) != 1:
                continue
            b = uu + v * v
            a = abs(uu - v * v - 2 * u * v)
            c = uu - v * v + 2 * u * v
            t = ApTriple(a, b, c)
            if region.admits(t):
                yield t


def brute_oracle(region: Region, include_trivial: bool = True) -> int:
    """Independent slow count: scan b, then coprime a < b, test 2b^2 - a^2.

    Refuses effective b-bounds above 10^4; the oracle is deliberately
    small-scale.
    """
    if isinstance(region, RatioBound):
        kind, x, y, num, den = 0, region.x, 0, region.delta.numerator, region.delta.denominator
        b_hi = math.isqrt(region.x)
    elif isinstance(region, MaxBound):
        kind, x, y, num, den = 1, region.x, 0, 0, 1
        b_hi = math.isqrt(region.x)  # b <= c
    elif isinstance(region, Rect):
        kind, x, y, num, den = 2, region.x, region.y, 0, 1
        b_hi = math.isqrt(region.x)
    else:
        kind, x, y, num, den = 3, region.x, 0, 0, 1
        b_hi = region.x  # a >= 1
    if b_hi > _ORACLE_B_LIMIT:
        raise OracleBudgetError(
            f"oracle b-bound {b_hi} exceeds the {_ORACLE_B_LIMIT} budget"
        )
    if _int64_safe(region):
        count = int(_kernels.oracle_count(kind, x, y, num, den, b_hi))
    else:
        count = _oracle_python(region, b_hi)
    if include_trivial and region.admits(ApTriple(1, 1, 1)):
        count += 1
    return count


def _oracle_python(region: Region, b_hi: int) -> int:
    """Arbitrary-precision oracle scan, for bounds the int64 kernel cannot hold."""
    count = 0
    for b in range(1, b_hi + 1):
        for a in range(1, b):
            c = is_square(2 * b * b - a * a)
            if c is None or math.gcd(a, b) != 1:
                continue
            if region.admits(ApTriple(a, b, c)):
                count += 1
    return count


def _int64_safe(region: Region) -> bool:
    if isinstance(region, RatioBound):
        lim = (1 << 62) // max(1, region.x)
        return region.delta.numerator < lim and region.delta.denominator < lim // 2
    return True


def _count_nontrivial(region: Region, threads: int = 1) -> int:
    """Exact nontrivial count via the kernels, partitioned over u."""
    if not _int64_safe(region):
        return sum(1 for t in enumerate_aps(region, include_trivial=False))
    u_hi = _pair_bounds(region)
    if isinstance(region, RatioBound):
        kernel: Callable[[int, int], int] = lambda lo, hi: _kernels.count_ratio(
            math.isqrt(region.x),
            region.delta.numerator,
            region.delta.denominator,
            lo,
            hi,
        )
    elif isinstance(region, MaxBound):
        kernel = lambda lo, hi: _kernels.count_max(math.isqrt(region.x), lo, hi)
    elif isinstance(region, Rect):
        kernel = lambda lo, hi: _kernels.count_rect(
            math.isqrt(region.x), math.isqrt(region.y), lo, hi
        )
    else:
        u0 = int(float(region.x) ** 0.25) + 1
        kernel = lambda lo, hi: _kernels.count_product(region.x, u0, lo, hi)
    if threads <= 1 or u_hi < 64:
        return int(kernel(2, u_hi))
    edges = [2 + (u_hi - 2) * i // threads for i in range(threads + 1)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = pool.map(lambda lohi: kernel(*lohi), zip(edges, edges[1:]))
        return int(sum(parts))


def count_region(region: Region, include_trivial: bool = True, threads: int = 1) -> int:
    """Exact cardinality of enumerate_aps over the region."""
    count = _count_nontrivial(region, threads)
    if include_trivial and region.admits(ApTriple(1, 1, 1)):
        count += 1
    return count


#: constant of the rectangle count second term:
#: sqrt(2) (1 + 3/2 log 2 - log(1 + sqrt 2)) / pi^2
RECT_CONSTANT = math.sqrt(2.0) * (1.0 + 1.5 * math.log(2.0) - LOG_UNIT) / math.pi**2


def main_term(region: Region) -> float:
    """Leading asymptotic for the count over the region."""
    if isinstance(region, RatioBound):
        delta = float(region.delta)
        return (
            2.0 / math.pi**2 * math.asin(math.sqrt(delta / 2.0)) * math.sqrt(region.x)
        )
    if isinstance(region, MaxBound):
        return math.sqrt(2.0) / math.pi**2 * LOG_UNIT * math.sqrt(region.x)
    if isinstance(region, Rect):
        y_half = math.sqrt(region.y)
        return (
            y_half * math.log(region.x / region.y) / (math.sqrt(2.0) * math.pi**2)
            + RECT_CONSTANT * y_half
        )
    return hypergeom_product_constant() * math.sqrt(region.x)


def scan(
    theorem: str,
    grid: list[int],
    delta: Optional[Fraction] = None,
    y_exponent: float = 0.75,
    include_trivial: bool = True,
    threads: int = 1,
) -> list[CountReport]:
    """Exact count vs. main term over a grid of sizes.

    theorem: "ratio" | "max" | "rect" | "product" | "ratl-points".
    Rect sizes pair X with Y = round(X^y_exponent).
    """
    reports = []
    for x in grid:
        if theorem == "ratio":
            region: Region = RatioBound(x, delta if delta is not None else Fraction(1))
        elif theorem == "max":
            region = MaxBound(x)
        elif theorem == "rect":
            region = Rect(x, int(round(float(x) ** y_exponent)))
        elif theorem == "product":
            region = ProductBound(x)
        elif theorem == "ratl-points":
            region = RatioBound(x, Fraction(1))
        else:
            raise ValueError(f"unknown theorem id {theorem!r}")
        start = time.perf_counter()
        if theorem == "ratl-points":
            count = rational_point_sum(x, threads=threads)
            main = 4.0 / math.pi * math.sqrt(x)
        else:
            count = count_region(region, include_trivial, threads)
            main = main_term(region)
        elapsed = time.perf_counter() - start
        abs_err = abs(count - main)
        reports.append(
            CountReport(
                theorem,
                region,
                count,
                includes_trivial=include_trivial,
                main_term=main,
                abs_error=abs_err,
                rel_error=abs_err / main if main > 0 else math.inf,
                elapsed=elapsed,
            )
        )
    return reports


def equidist_ratio(x: int, delta: Fraction, threads: int = 1) -> float:
    """count(RatioBound(x, delta)) / count(RatioBound(x, 1)).

    Tends to arcsin(sqrt(delta/2)) / (pi/4) if the circle points
    equidistribute in arc length.
    """
    if x < 10**4:
        raise ValueError("equidist_ratio requires x >= 10^4")
    denom = count_region(RatioBound(x, Fraction(1)), threads=threads)
    if denom == 0:
        raise ValueError("empty reference region")
    numer = count_region(RatioBound(x, delta), threads=threads)
    return numer / denom


def rational_point_sum(x: int, threads: int = 1) -> int:
    """sum_{b <= sqrt(x)} A(b): rational points on x^2+y^2=2 with denominator <= sqrt(x).

    Each nontrivial AP with b <= sqrt(x) unfolds to 8 signed/ordered points;
    the denominator-1 points (+-1, +-1) contribute 4.
    """
    if math.isqrt(x) > 10**6:
        raise ValueError("rational_point_sum requires sqrt(x) <= 10^6")
    nontrivial = count_region(RatioBound(x, Fraction(1)), include_trivial=False, threads=threads)
    return 4 + 8 * nontrivial


def rational_point_sum_direct(x: int) -> int:
    """Cross-check route: direct summation of A(b) over b <= sqrt(x)."""
    return sum(primitive_point_count_A(b) for b in range(1, math.isqrt(x) + 1))


def right_triangles(x: int, omega: float, threads: int = 1) -> RightTriangleReport:
    """Primitive right triangles with hypotenuse <= x and acute angles within
    omega of pi/4, against the main term 2 omega x / pi^2."""
    if not 0.0 < omega <= math.pi / 4.0 + 1e-12:
        raise ValueError("omega must lie in (0, pi/4]")
    _check_bound(x)
    tan_w = math.tan(omega)
    u_hi = math.isqrt(x) + 1
    if threads <= 1 or u_hi < 64:
        count = int(_kernels.count_right_triangles(x, tan_w, 2, u_hi))
    else:
        edges = [2 + (u_hi - 2) * i // threads for i in range(threads + 1)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = pool.map(
                lambda lohi: _kernels.count_right_triangles(x, tan_w, *lohi),
                zip(edges, edges[1:]),
            )
            count = int(sum(parts))
    main = 2.0 * omega / math.pi**2 * x
    abs_err = abs(count - main)
    return RightTriangleReport(count, main, abs_err, abs_err / main if main else math.inf)


def default_threads() -> int:
    """Thread count from APSQ_THREADS, defaulting to 1."""
    try:
        return max(1, int(os.environ.get("APSQ_THREADS", "1")))
    except ValueError:
        return 1
