"""Independent numeric oracles used by the test suite.

Everything here is deliberately implemented from first principles so the
tests do not share code with the library under test: the normal CDF is a
Maclaurin series for erf evaluated in 60-digit mpmath arithmetic, and the
quantile oracle inverts it by plain bisection.  Slow but trustworthy.
"""

from __future__ import annotations

import functools

import mpmath

mpmath.mp.dps = 60

_SQRT2 = mpmath.sqrt(2)
_TWO_OVER_SQRT_PI = 2 / mpmath.sqrt(mpmath.pi)

# Series accuracy degrades past |z| ~ 9 at 60 digits; quantiles for
# p in [1e-18, 1 - 1e-18] stay well inside.
ORACLE_Z_LIMIT = 9.0


def erf_series(z) -> mpmath.mpf:
    """erf(z) via the alternating Maclaurin series, summed to 1e-50."""
    z = mpmath.mpf(z)
    if abs(z) > ORACLE_Z_LIMIT:
        raise ValueError(f"series oracle only supports |z| <= {ORACLE_Z_LIMIT}")
    total = mpmath.mpf(0)
    term = z  # z^(2k+1) / k! at k = 0
    k = 0
    while True:
        contribution = term / (2 * k + 1)
        total += contribution if k % 2 == 0 else -contribution
        if abs(contribution) < mpmath.mpf("1e-50") and k > abs(z) ** 2:
            break
        k += 1
        term = term * z * z / k
    return _TWO_OVER_SQRT_PI * total


def oracle_normal_cdf(x) -> mpmath.mpf:
    """Standard normal CDF from the series erf."""
    return (1 + erf_series(mpmath.mpf(x) / _SQRT2)) / 2


@functools.lru_cache(maxsize=None)
def oracle_normal_quantile(p: str | float) -> float:
    """Invert oracle_normal_cdf by bisection to ~1e-15.

    Accepts the probability as a float or a decimal string (strings avoid
    double rounding when the caller wants an exact decimal input).
    """
    target = mpmath.mpf(p)
    if not 0 < target < 1:
        raise ValueError("p must be in (0, 1)")
    lo, hi = mpmath.mpf(-ORACLE_Z_LIMIT), mpmath.mpf(ORACLE_Z_LIMIT)
    if not oracle_normal_cdf(lo) < target < oracle_normal_cdf(hi):
        raise ValueError("p is outside the oracle's invertible range")
    for _ in range(200):
        mid = (lo + hi) / 2
        if oracle_normal_cdf(mid) < target:
            lo = mid
        else:
            hi = mid
        if hi - lo < mpmath.mpf("1e-16"):
            break
    return float((lo + hi) / 2)


def smallest_n_by_scan(p_alpha: float, mdes: float, n_max: int = 10_000_000) -> int:
    """Least integer N with p_alpha / sqrt(N) <= mdes, found by linear scan."""
    n = 1
    while p_alpha / n**0.5 > mdes:
        n += 1
        if n > n_max:
            raise RuntimeError("scan exceeded n_max")
    return n
