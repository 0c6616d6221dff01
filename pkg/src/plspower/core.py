"""Inverse square root method for PLS-SEM sample-size planning.

Two directions of the same relationship between a standardized path
coefficient p and the sample size N:

    a priori:     N    = ceil((p_alpha / p)^2)
    sensitivity:  p    = p_alpha / sqrt(N)

where p_alpha = z(1 - alpha) + z(power) is the one-tailed critical
constant (Kock & Hadaya, 2018).  Results at N <= 10 carry a warning:
in that regime the gamma-exponential method is the appropriate tool.
"""

from __future__ import annotations

import functools
import math
import operator
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal

from .errors import DomainError

__all__ = [
    "SMALL_SAMPLE_CUTOFF",
    "SMALL_SAMPLE_WARNING",
    "check_mdes_domain",
    "PowerSpec",
    "CriticalConstant",
    "APrioriResult",
    "SensitivityResult",
    "CurveSeries",
    "critical_constant",
    "a_priori",
    "sensitivity",
    "a_priori_curve",
    "sensitivity_curve",
    "ten_times_rule",
]

# Slack subtracted before ceil() so that exact integers produced by the
# round trip N -> mdes -> N survive floating-point overshoot.
_CEIL_EPSILON = 1e-9

SMALL_SAMPLE_CUTOFF = 10
SMALL_SAMPLE_WARNING = (
    "Warning: the inverse square root method is unreliable for sample sizes "
    "of 10 or fewer; the gamma-exponential method is more appropriate for "
    "such small samples."
)

# Default plotting grids: effect-size axis for the a priori curve,
# sample-size axis for the sensitivity curve.
APRIORI_CURVE_DEFAULTS = (0.05, 0.90, 0.005)
SENSITIVITY_CURVE_DEFAULTS = (5, 500, 1)


def _as_int(value, what: str) -> int:
    try:
        return operator.index(value)
    except TypeError:
        raise DomainError(f"{what} must be an integer, got {value!r}") from None


@dataclass(frozen=True)
class PowerSpec:
    """Significance level and target power governing every computation."""

    alpha: float
    power: float = 0.80

    def __post_init__(self):
        if not 0.0 < self.alpha < 0.5:
            raise DomainError(
                f"alpha must be in (0, 0.5), got {self.alpha!r}")
        if not 0.5 <= self.power < 1.0:
            raise DomainError(
                f"power must be in [0.5, 1), got {self.power!r}")


@dataclass(frozen=True)
class CriticalConstant:
    """The critical constant p_alpha in the numerator of the formula."""

    p_alpha: float


@dataclass(frozen=True)
class APrioriResult:
    """Minimum required sample size for a target effect size."""

    mdes: float
    spec: PowerSpec
    n_required: int
    small_sample_flag: bool
    p_alpha: float
    warning: str | None = field(default=None)


@dataclass(frozen=True)
class SensitivityResult:
    """Minimum detectable effect size for a fixed sample size."""

    n: int
    spec: PowerSpec
    mdes: float
    mdes_display: str
    small_sample_flag: bool
    p_alpha: float
    warning: str | None = field(default=None)


@dataclass(frozen=True)
class CurveSeries:
    """Sampled effect-size / sample-size trade-off for plotting.

    Points are strictly increasing in x and strictly decreasing in y;
    the reference point marks where the dashed guide lines cross.
    """

    mode: str  # "a_priori" | "sensitivity"
    points: tuple[tuple[float, float], ...]
    reference: tuple[float, float]

    def __post_init__(self):
        if self.mode not in ("a_priori", "sensitivity"):
            raise DomainError(f"unknown curve mode {self.mode!r}")
        xs = [p[0] for p in self.points]
        ys = [p[1] for p in self.points]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise DomainError("curve x values must be strictly increasing")
        if any(b >= a for a, b in zip(ys, ys[1:])):
            raise DomainError("curve y values must be strictly decreasing")


@functools.lru_cache(maxsize=256)
def _p_alpha(alpha: float, power: float) -> float:
    from .quantile import normal_quantile

    return normal_quantile(1.0 - alpha) + normal_quantile(power)


def critical_constant(spec: PowerSpec) -> CriticalConstant:
    """Critical constant p_alpha = z(1 - alpha) + z(power), one-tailed.

    This composition reproduces the published values 3.168 / 2.486 / 2.123
    for alpha = .01 / .05 / .10 at 80% power.
    """
    return CriticalConstant(_p_alpha(spec.alpha, spec.power))


def _small_sample(n: int) -> tuple[bool, str | None]:
    if n <= SMALL_SAMPLE_CUTOFF:
        return True, SMALL_SAMPLE_WARNING
    return False, None


def check_mdes_domain(mdes) -> float:
    """Boundary check for user-supplied effect sizes.

    Standardized path coefficients have magnitude below 1, so the CLI,
    service, and UI all reject anything outside (0, 1) with a clear
    message instead of silently answering N = 1.
    """
    if not isinstance(mdes, (int, float)) or math.isnan(mdes):
        raise DomainError(f"MDES must be a number in (0, 1), got {mdes!r}")
    if not 0.0 < mdes < 1.0:
        raise DomainError(
            "MDES must lie in (0, 1): path coefficients of standardized "
            f"constructs have magnitude below 1 (got {mdes!r})")
    return float(mdes)


def a_priori(mdes: float, spec: PowerSpec) -> APrioriResult:
    """Minimum sample size needed to detect an effect of size `mdes`.

    Accepts any positive effect size so that the sensitivity round trip
    N -> mdes -> N is exact for every N (tiny N give mdes above 1);
    user-facing entry points apply check_mdes_domain first.
    """
    if (not isinstance(mdes, (int, float)) or math.isnan(mdes)
            or math.isinf(mdes) or mdes <= 0.0):
        raise DomainError(
            f"MDES must be a positive finite number, got {mdes!r}")
    p_alpha = critical_constant(spec).p_alpha
    n = max(1, math.ceil((p_alpha / mdes) ** 2 - _CEIL_EPSILON))
    flag, warning = _small_sample(n)
    return APrioriResult(float(mdes), spec, n, flag, p_alpha, warning)


def _round_half_up_2(x: float) -> str:
    # Half-up on the shortest decimal representation of the double, so
    # 0.305 displays as "0.31" the way a human rounding it would expect.
    return str(Decimal(repr(x)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def sensitivity(n, spec: PowerSpec) -> SensitivityResult:
    """Minimum detectable effect size at sample size `n`."""
    n = _as_int(n, "sample size N")
    if n < 1:
        raise DomainError(f"sample size N must be at least 1, got {n}")
    p_alpha = critical_constant(spec).p_alpha
    mdes = p_alpha / math.sqrt(n)
    flag, warning = _small_sample(n)
    return SensitivityResult(
        n, spec, mdes, _round_half_up_2(mdes), flag, p_alpha, warning)


def _grid(lo: float, hi: float, step: float) -> list[float]:
    count = math.floor((hi - lo) / step + 1e-9) + 1
    values = [lo + i * step for i in range(count)]
    if values[-1] > hi:  # accumulated float overshoot on the last point
        values[-1] = hi
    return values


def a_priori_curve(
    spec: PowerSpec,
    mdes_lo: float = APRIORI_CURVE_DEFAULTS[0],
    mdes_hi: float = APRIORI_CURVE_DEFAULTS[1],
    step: float = APRIORI_CURVE_DEFAULTS[2],
    *,
    reference_mdes: float,
) -> CurveSeries:
    """Required-N curve over an effect-size grid, with a reference point.

    Because N is an integer ceiling, neighbouring grid points can share
    the same N; such ties are collapsed (keeping the largest MDES of each
    run, so the grid endpoints survive) and the series stays strictly
    monotone.
    """
    if not 0.0 < mdes_lo < mdes_hi < 1.0:
        raise DomainError(
            f"need 0 < mdes_lo < mdes_hi < 1, got [{mdes_lo!r}, {mdes_hi!r}]")
    if step <= 0.0:
        raise DomainError(f"step must be positive, got {step!r}")
    if not mdes_lo <= reference_mdes <= mdes_hi:
        raise DomainError(
            f"reference MDES {reference_mdes!r} outside "
            f"[{mdes_lo!r}, {mdes_hi!r}]")
    points: list[tuple[float, float]] = []
    for m in _grid(mdes_lo, mdes_hi, step):
        n = a_priori(m, spec).n_required
        if points and n == points[-1][1]:
            points[-1] = (m, n)
        else:
            points.append((m, n))
    ref = (float(reference_mdes), a_priori(reference_mdes, spec).n_required)
    return CurveSeries("a_priori", tuple(points), ref)


def sensitivity_curve(
    spec: PowerSpec,
    n_lo: int = SENSITIVITY_CURVE_DEFAULTS[0],
    n_hi: int = SENSITIVITY_CURVE_DEFAULTS[1],
    step: int = SENSITIVITY_CURVE_DEFAULTS[2],
    *,
    reference_n: int,
) -> CurveSeries:
    """Detectable-effect curve over a sample-size grid."""
    n_lo = _as_int(n_lo, "n_lo")
    n_hi = _as_int(n_hi, "n_hi")
    step = _as_int(step, "step")
    reference_n = _as_int(reference_n, "reference N")
    if not 1 <= n_lo < n_hi:
        raise DomainError(f"need 1 <= n_lo < n_hi, got [{n_lo}, {n_hi}]")
    if step < 1:
        raise DomainError(f"step must be a positive integer, got {step}")
    if not n_lo <= reference_n <= n_hi:
        raise DomainError(
            f"reference N {reference_n} outside [{n_lo}, {n_hi}]")
    points = tuple(
        (float(n), sensitivity(n, spec).mdes)
        for n in range(n_lo, n_hi + 1, step))
    ref = (float(reference_n), sensitivity(reference_n, spec).mdes)
    return CurveSeries("sensitivity", points, ref)


def ten_times_rule(max_arrowheads) -> int:
    """Heuristic baseline: N = 10 x the maximum number of arrowheads
    pointing at any latent variable.

    Kept only for side-by-side comparison in reports; it ignores effect
    size, alpha, and power, and routinely underestimates the required N.
    """
    k = _as_int(max_arrowheads, "max_arrowheads")
    if k < 1:
        raise DomainError(f"max_arrowheads must be at least 1, got {k}")
    return 10 * k
