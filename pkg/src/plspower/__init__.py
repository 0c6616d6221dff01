"""Power analysis for PLS-SEM studies via the inverse square root method."""

from .core import (
    APrioriResult,
    CriticalConstant,
    CurveSeries,
    PowerSpec,
    SensitivityResult,
    SMALL_SAMPLE_WARNING,
    a_priori,
    a_priori_curve,
    critical_constant,
    sensitivity,
    sensitivity_curve,
    ten_times_rule,
)
from .errors import DegenerateSampleError, DomainError
from .quantile import normal_cdf, normal_quantile
from .simulate import (
    PowerEstimate,
    SimConfig,
    ValidationReport,
    empirical_power,
    estimate_path,
    generate_dataset,
    validate_apriori,
)

__version__ = "0.1.0"

__all__ = [
    "APrioriResult",
    "CriticalConstant",
    "CurveSeries",
    "DegenerateSampleError",
    "DomainError",
    "PowerEstimate",
    "PowerSpec",
    "SensitivityResult",
    "SimConfig",
    "SMALL_SAMPLE_WARNING",
    "ValidationReport",
    "a_priori",
    "a_priori_curve",
    "critical_constant",
    "empirical_power",
    "estimate_path",
    "generate_dataset",
    "normal_cdf",
    "normal_quantile",
    "sensitivity",
    "sensitivity_curve",
    "ten_times_rule",
    "validate_apriori",
]
