"""Monte Carlo check that the formula's sample sizes deliver their power.

Data-generating model: a single standardized path.  Both variables have
unit population variance and the population path coefficient equals
`true_path`:

    x ~ N(0, 1),  y = true_path * x + sqrt(1 - true_path^2) * e,  e ~ N(0, 1)

Each replication estimates the standardized slope by OLS and applies a
one-tailed z-test, mirroring the normal-approximation derivation of the
critical constant.  The small-n optimism of the z-test is the same regime
the N <= 10 warning routes to the gamma-exponential method.

Seeding: one master seed; replication i draws from the i-th child of
``numpy.random.SeedSequence(seed)`` through a counter-based Philox
generator, so replications can be evaluated in any order or in parallel
with bit-identical results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import PowerSpec, a_priori, check_mdes_domain
from .errors import DegenerateSampleError, DomainError
from .quantile import normal_quantile

__all__ = [
    "SimConfig",
    "PowerEstimate",
    "ValidationReport",
    "generate_dataset",
    "estimate_path",
    "empirical_power",
    "validate_apriori",
    "validation_payload",
]

_CHUNK = 1024

# Pass bound for validate_apriori: deliberately slack against the 0.80
# target because the inverse square root method is an approximation.
PASS_THRESHOLD = 0.75


@dataclass(frozen=True)
class SimConfig:
    """One empirical-power run: model, sample size, test, and seeding."""

    true_path: float
    n: int
    spec: PowerSpec
    replications: int = 20_000
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.true_path < 1.0:
            raise DomainError(
                f"true_path must be in [0, 1), got {self.true_path!r}")
        if not isinstance(self.n, int) or self.n < 3:
            raise DomainError(
                f"n must be an integer >= 3 (estimation needs residual "
                f"degrees of freedom), got {self.n!r}")
        if not isinstance(self.replications, int) or self.replications < 100:
            raise DomainError(
                f"replications must be an integer >= 100, "
                f"got {self.replications!r}")
        if not isinstance(self.seed, int) or not 0 <= self.seed < 2**64:
            raise DomainError(
                f"seed must be a 64-bit unsigned integer, got {self.seed!r}")


@dataclass(frozen=True)
class PowerEstimate:
    """Empirical rejection proportion with Monte Carlo uncertainty."""

    power_hat: float
    std_error: float
    ci95: tuple[float, float]
    rejections: int
    replications: int
    two_tailed_rate: float
    degenerate_redraws: int


@dataclass(frozen=True)
class ValidationReport:
    """a_priori's answer confronted with the simulated power it achieves."""

    mdes: float
    spec: PowerSpec
    n_required: int
    small_sample_flag: bool
    warning: str | None
    estimate: PowerEstimate
    passed: bool


def _uniforms(child: np.random.SeedSequence, count: int) -> np.ndarray:
    gen = np.random.Generator(np.random.Philox(child))
    u = gen.random(count)
    # random() can return exactly 0 (probability 2^-53); the quantile
    # transform needs (0, 1) exclusive.
    u[u == 0.0] = 2.0**-54
    return u


def generate_dataset(true_path: float, n: int, rng: np.random.Generator):
    """Draw one (x, y) sample of size n from the single-path model.

    Normal variates come from the inverse-CDF transform of uniforms so
    the simulation exercises the same quantile code the formula rests on.
    """
    if not 0.0 <= true_path < 1.0:
        raise DomainError(f"true_path must be in [0, 1), got {true_path!r}")
    u = rng.random(2 * n)
    u[u == 0.0] = 2.0**-54
    z = normal_quantile(u)
    x = z[:n]
    y = true_path * x + math.sqrt(1.0 - true_path**2) * z[n:]
    return x, y


def estimate_path(x, y) -> tuple[float, float]:
    """Standardized OLS slope of y on x, with its standard error.

    After standardizing both variables to sample mean 0 and SD 1 the
    slope equals the Pearson correlation; se = sqrt((1 - p^2) / (n - 2)).
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1 or x.size < 3:
        raise DomainError("x and y must be equal-length 1-d arrays of size >= 3")
    xc = x - x.mean()
    yc = y - y.mean()
    sxx = float(xc @ xc)
    syy = float(yc @ yc)
    if sxx == 0.0 or syy == 0.0:
        raise DegenerateSampleError("sample has zero variance")
    p_hat = float(xc @ yc) / math.sqrt(sxx * syy)
    p_hat = max(-1.0, min(1.0, p_hat))
    se_hat = math.sqrt(max(0.0, 1.0 - p_hat * p_hat) / (x.size - 2))
    return p_hat, se_hat


def _simulate_chunk(children, true_path: float, n: int):
    """Estimates for a batch of replications; returns (p_hats, se_hats, redraws).

    Row i is computed exactly as a lone generate_dataset/estimate_path
    pair seeded from children[i], so chunked and sequential evaluation
    agree bit for bit.
    """
    rows = len(children)
    u = np.empty((rows, 2 * n))
    for i, child in enumerate(children):
        u[i] = _uniforms(child, 2 * n)
    z = normal_quantile(u)
    x = z[:, :n]
    y = true_path * x + math.sqrt(1.0 - true_path**2) * z[:, n:]

    redraws = 0
    while True:
        xc = x - x.mean(axis=1, keepdims=True)
        yc = y - y.mean(axis=1, keepdims=True)
        sxx = (xc * xc).sum(axis=1)
        syy = (yc * yc).sum(axis=1)
        bad = np.flatnonzero((sxx == 0.0) | (syy == 0.0))
        if bad.size == 0:
            break
        # Zero-variance sample: redraw from a fresh substream of the
        # replication's own SeedSequence.  Probability zero with
        # continuous variates, but the branch must exist.
        for i in bad:
            redraws += 1
            zi = normal_quantile(_uniforms(children[i].spawn(1)[0], 2 * n))
            x[i] = zi[:n]
            y[i] = true_path * x[i] + math.sqrt(1.0 - true_path**2) * zi[n:]

    sxy = (xc * yc).sum(axis=1)
    p_hats = np.clip(sxy / np.sqrt(sxx * syy), -1.0, 1.0)
    se_hats = np.sqrt(np.maximum(0.0, 1.0 - p_hats**2) / (n - 2))
    return p_hats, se_hats, redraws


def empirical_power(config: SimConfig, chunk_size: int = _CHUNK) -> PowerEstimate:
    """Empirical one-tailed power over `config.replications` replications.

    Fully deterministic given the seed; `chunk_size` only batches work
    and never changes the result.
    """
    z_one = normal_quantile(1.0 - config.spec.alpha)
    z_two = normal_quantile(1.0 - config.spec.alpha / 2.0)
    children = np.random.SeedSequence(config.seed).spawn(config.replications)

    rejections = 0
    two_tailed = 0
    redraws = 0
    for start in range(0, config.replications, chunk_size):
        batch = children[start:start + chunk_size]
        p_hats, se_hats, batch_redraws = _simulate_chunk(
            batch, config.true_path, config.n)
        redraws += batch_redraws
        with np.errstate(divide="ignore"):
            stats = np.where(
                se_hats > 0.0,
                p_hats / np.where(se_hats > 0.0, se_hats, 1.0),
                np.inf * np.sign(p_hats))
        rejections += int((stats > z_one).sum())
        two_tailed += int((np.abs(stats) > z_two).sum())

    power_hat = rejections / config.replications
    std_error = math.sqrt(power_hat * (1.0 - power_hat) / config.replications)
    ci_lo = max(0.0, power_hat - 1.96 * std_error)
    ci_hi = min(1.0, power_hat + 1.96 * std_error)
    return PowerEstimate(
        power_hat=power_hat,
        std_error=std_error,
        ci95=(ci_lo, ci_hi),
        rejections=rejections,
        replications=config.replications,
        two_tailed_rate=two_tailed / config.replications,
        degenerate_redraws=redraws,
    )


def validate_apriori(
    mdes: float,
    spec: PowerSpec,
    replications: int = 20_000,
    seed: int = 0,
) -> ValidationReport:
    """Run a_priori, then check by simulation that its N delivers the power."""
    result = a_priori(check_mdes_domain(mdes), spec)
    estimate = empirical_power(SimConfig(
        true_path=mdes,
        n=result.n_required,
        spec=spec,
        replications=replications,
        seed=seed,
    ))
    return ValidationReport(
        mdes=result.mdes,
        spec=spec,
        n_required=result.n_required,
        small_sample_flag=result.small_sample_flag,
        warning=result.warning,
        estimate=estimate,
        passed=estimate.power_hat >= PASS_THRESHOLD,
    )


def validation_payload(report: ValidationReport) -> dict:
    est = report.estimate
    return {
        "mdes": report.mdes,
        "alpha": report.spec.alpha,
        "power": report.spec.power,
        "n_required": report.n_required,
        "small_sample_flag": report.small_sample_flag,
        "warning": report.warning,
        "replications": est.replications,
        "power_hat": est.power_hat,
        "std_error": est.std_error,
        "ci95": [est.ci95[0], est.ci95[1]],
        "rejections": est.rejections,
        "two_tailed_rate": est.two_tailed_rate,
        "degenerate_redraws": est.degenerate_redraws,
        "pass": report.passed,
    }
