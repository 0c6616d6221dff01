"""Human-readable sentences and JSON payloads shared by the CLI and service.

The two result sentences are a compatibility contract and must not be
reworded.  Machine-readable payloads carry full-precision numbers;
display rounding is confined to `mdes_display`.
"""

from __future__ import annotations

from .core import APrioriResult, CurveSeries, SensitivityResult

__all__ = [
    "format_number",
    "format_power_percent",
    "apriori_message",
    "sensitivity_message",
    "apriori_payload",
    "sensitivity_payload",
    "curve_payload",
]


def format_number(x) -> str:
    """Shortest faithful decimal form: 0.5 -> '0.5', 0.05 -> '0.05'."""
    if isinstance(x, int):
        return str(x)
    return repr(float(x))


def format_power_percent(power: float) -> str:
    """Power as a percentage, integer when exact: 0.8 -> '80'."""
    pct = round(power * 100.0, 9)
    if pct == int(pct):
        return str(int(pct))
    return f"{pct:g}"


def apriori_message(result: APrioriResult) -> str:
    return (
        f"To detect an effect of {format_number(result.mdes)} with "
        f"{format_power_percent(result.spec.power)}% power at "
        f"alpha = {format_number(result.spec.alpha)} you need at least "
        f"{result.n_required} observations."
    )


def sensitivity_message(result: SensitivityResult) -> str:
    return (
        f"With N = {result.n} and alpha = {format_number(result.spec.alpha)} "
        f"you can detect effects as small as {result.mdes_display} with "
        f"{format_power_percent(result.spec.power)}% power."
    )


def apriori_payload(result: APrioriResult) -> dict:
    return {
        "mdes": result.mdes,
        "alpha": result.spec.alpha,
        "power": result.spec.power,
        "p_alpha": result.p_alpha,
        "n_required": result.n_required,
        "small_sample_flag": result.small_sample_flag,
        "warning": result.warning,
        "message": apriori_message(result),
    }


def sensitivity_payload(result: SensitivityResult) -> dict:
    return {
        "n": result.n,
        "alpha": result.spec.alpha,
        "power": result.spec.power,
        "p_alpha": result.p_alpha,
        "mdes": result.mdes,
        "mdes_display": result.mdes_display,
        "small_sample_flag": result.small_sample_flag,
        "warning": result.warning,
        "message": sensitivity_message(result),
    }


def curve_payload(series: CurveSeries, spec) -> dict:
    return {
        "mode": series.mode,
        "alpha": spec.alpha,
        "power": spec.power,
        "points": [[x, y] for x, y in series.points],
        "reference": list(series.reference),
    }
