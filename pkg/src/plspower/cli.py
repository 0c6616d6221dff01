"""Command-line interface.

Subcommands mirror the two analysis directions plus curve export, a
Monte Carlo validation report, and the HTTP service launcher.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 validation
failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .core import (
    APRIORI_CURVE_DEFAULTS,
    SENSITIVITY_CURVE_DEFAULTS,
    PowerSpec,
    a_priori,
    a_priori_curve,
    check_mdes_domain,
    sensitivity,
    sensitivity_curve,
    ten_times_rule,
)
from .errors import DomainError
from .messages import (
    apriori_message,
    apriori_payload,
    format_number,
    format_power_percent,
    sensitivity_message,
    sensitivity_payload,
)
from .simulate import validate_apriori
from .svgchart import curve_to_csv, curve_to_svg

PAPER_ALPHAS = (0.01, 0.05, 0.10)


class UsageError(Exception):
    pass


def _spec_from(args) -> PowerSpec:
    if args.strict_paper and args.alpha not in PAPER_ALPHAS:
        raise UsageError(
            "--strict-paper restricts --alpha to 0.01, 0.05, or 0.10")
    return PowerSpec(args.alpha, args.power)


def cmd_apriori(args) -> int:
    spec = _spec_from(args)
    result = a_priori(check_mdes_domain(args.mdes), spec)
    baseline = (ten_times_rule(args.arrowheads)
                if args.arrowheads is not None else None)
    if args.format == "json":
        payload = apriori_payload(result)
        if baseline is not None:
            payload["ten_times_rule_n"] = baseline
        print(json.dumps(payload, indent=2))
    else:
        print(apriori_message(result))
        if result.warning:
            print(result.warning)
        if baseline is not None:
            print(f"10-times rule (heuristic baseline, ignores effect size "
                  f"and alpha): N = {baseline} for {args.arrowheads} "
                  f"arrowheads.")
    return 0


def cmd_sensitivity(args) -> int:
    spec = _spec_from(args)
    result = sensitivity(args.n, spec)
    if args.format == "json":
        print(json.dumps(sensitivity_payload(result), indent=2))
    else:
        print(sensitivity_message(result))
        if result.warning:
            print(result.warning)
    return 0


def _graph_series(args, spec: PowerSpec):
    if args.method == "apriori":
        if args.mdes is None:
            raise UsageError("graph --method apriori requires --mdes")
        mdes = check_mdes_domain(args.mdes)
        lo, hi, step = APRIORI_CURVE_DEFAULTS
        return a_priori_curve(
            spec, min(lo, mdes), max(hi, mdes), step, reference_mdes=mdes)
    if args.n is None:
        raise UsageError("graph --method sensitivity requires --n")
    lo, hi, step = SENSITIVITY_CURVE_DEFAULTS
    return sensitivity_curve(
        spec, min(lo, args.n), max(hi, args.n), step, reference_n=args.n)


def cmd_graph(args) -> int:
    spec = _spec_from(args)
    series = _graph_series(args, spec)
    content = curve_to_csv(series) if args.format == "csv" else curve_to_svg(
        series, title=None)
    try:
        Path(args.out).write_text(content, encoding="utf-8", newline="\n")
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    return 0


def cmd_validate(args) -> int:
    if args.reps < 100:
        raise UsageError(f"--reps must be at least 100, got {args.reps}")
    spec = _spec_from(args)
    report = validate_apriori(
        check_mdes_domain(args.mdes), spec, replications=args.reps,
        seed=args.seed)
    est = report.estimate
    print(f"Inverse square root method: N = {report.n_required} "
          f"(MDES {format_number(report.mdes)}, "
          f"alpha = {format_number(spec.alpha)}, "
          f"{format_power_percent(spec.power)}% power)")
    if report.warning:
        print(report.warning)
    print(f"Empirical power over {est.replications} replications "
          f"(seed {args.seed}): {est.power_hat:.4f}")
    print(f"95% CI: [{est.ci95[0]:.4f}, {est.ci95[1]:.4f}]")
    print(f"Two-tailed rejection rate: {est.two_tailed_rate:.4f}")
    print(f"Degenerate redraws: {est.degenerate_redraws}")
    if report.passed:
        print("Result: PASS (empirical power >= 0.75)")
        return 0
    print("Result: FAIL (empirical power < 0.75)")
    return 3


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(web_dir=args.web_dir)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plspower",
        description="Sample-size and minimum-detectable-effect-size "
                    "planning for PLS-SEM studies (inverse square root "
                    "method).")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--alpha", type=float, required=True,
                       help="significance level, in (0, 0.5)")
        p.add_argument("--power", type=float, default=0.8,
                       help="target power, in [0.5, 1) (default 0.8)")
        p.add_argument("--strict-paper", action="store_true",
                       help="restrict --alpha to 0.01 / 0.05 / 0.10")

    p = sub.add_parser("apriori",
                       help="minimum sample size for a target effect size")
    add_common(p)
    p.add_argument("--mdes", type=float, required=True,
                   help="minimum detectable effect size, in (0, 1)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--arrowheads", type=int, default=None,
                   help="also print the 10-times-rule heuristic baseline "
                        "for this many arrowheads")
    p.set_defaults(handler=cmd_apriori)

    p = sub.add_parser("sensitivity",
                       help="minimum detectable effect size for a sample size")
    add_common(p)
    p.add_argument("--n", type=int, required=True, help="sample size")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=cmd_sensitivity)

    p = sub.add_parser("graph", help="export the trade-off curve")
    add_common(p)
    p.add_argument("--method", choices=("apriori", "sensitivity"),
                   required=True)
    p.add_argument("--mdes", type=float, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--format", choices=("svg", "csv"), default="svg")
    p.add_argument("--out", required=True, help="output file path")
    p.set_defaults(handler=cmd_graph)

    p = sub.add_parser("validate",
                       help="Monte Carlo check of the a priori sample size")
    add_common(p)
    p.add_argument("--mdes", type=float, required=True)
    p.add_argument("--reps", type=int, default=20_000,
                   help="Monte Carlo replications, at least 100")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("serve", help="run the JSON HTTP service")
    p.add_argument("--host", default=os.environ.get("PLSPOWER_HOST",
                                                    "127.0.0.1"))
    p.add_argument("--port", type=int,
                   default=int(os.environ.get("PLSPOWER_PORT", "8000")))
    p.add_argument("--web-dir", default=None,
                   help="directory with the built web UI "
                        "(default: $PLSPOWER_WEB_DIR or ./frontend/dist)")
    p.set_defaults(handler=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
