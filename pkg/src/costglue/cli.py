"""Command line runner for the verification suites.

``costglue run --suite <name>`` executes one registered suite under a
fixed configuration and emits its report as JSON (default) or markdown;
``costglue list`` enumerates the registry.  Reports are pure functions
of (suite, seed, iterations, mode): two runs with the same configuration
produce byte-identical output.  Exit status is 0 when every case
passed, 1 on any failed case or internal invariant breach, and 2 for
usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .harness import Report
from .phase import CoherenceError, EvaluationMode
from .sealing import BoundViolation
from .suites import REGISTRY

MAX_SEED = 2**64 - 1


@dataclass(frozen=True)
class SuiteConfig:
    """Everything a suite run depends on."""

    suite: str
    seed: int = 0
    iterations: int = 1000
    mode: EvaluationMode = EvaluationMode.FULL
    report_path: Optional[str] = None
    format: str = "json"


def run_suite(config: SuiteConfig) -> Report:
    """Execute the configured suite; deterministic in the configuration."""
    try:
        fn = REGISTRY[config.suite]
    except KeyError:
        raise KeyError(
            f"unknown suite {config.suite!r}; available: {', '.join(sorted(REGISTRY))}"
        ) from None
    return fn(config.seed, config.iterations, config.mode)


def emit_json(report: Report) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


def emit_markdown(report: Report) -> str:
    d = report.to_dict()
    lines = [
        f"# Suite `{d['suite']}`",
        "",
        f"- seed: {d['seed']}",
        f"- iterations: {d['iterations']}",
        f"- mode: {d['mode']}",
        f"- cases: {d['cases']}",
        f"- failures: {len(d['failures'])}",
        f"- verdict: {'PASS' if report.passed else 'FAIL'}",
        "",
    ]
    if d["failures"]:
        lines.append("## Failures")
        lines.append("")
        lines.append("| law | input | expected | actual |")
        lines.append("|---|---|---|---|")
        for f in d["failures"]:
            row = (f["law"], f["input"], f["expected"], f["actual"])
            lines.append("| " + " | ".join(cell.replace("|", "\\|") for cell in row) + " |")
        lines.append("")
    if d["cost_table"]:
        lines.append("## Cost table")
        lines.append("")
        lines.append("| size | impl_cost | spec_cost |")
        lines.append("|---|---|---|")
        for row in d["cost_table"]:
            lines.append(f"| {row['size']} | {row['impl_cost']} | {row['spec_cost']} |")
        lines.append("")
    return "\n".join(lines)


def emit_report(report: Report, fmt: str) -> str:
    if fmt == "json":
        return emit_json(report)
    if fmt == "md":
        return emit_markdown(report)
    raise ValueError(f"unknown report format {fmt!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="costglue",
        description="Run cost-and-behavior verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run one suite and emit its report")
    run_p.add_argument("--suite", required=True, help="suite name (see `costglue list`)")
    run_p.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    run_p.add_argument("--iters", type=int, default=1000, help="sample count (default 1000)")
    run_p.add_argument(
        "--mode",
        choices=[m.value for m in EvaluationMode],
        default=EvaluationMode.FULL.value,
        help="observation mode (default full)",
    )
    run_p.add_argument("--report", default=None, help="write the report to this path instead of stdout")
    run_p.add_argument("--format", choices=["json", "md"], default="json", help="report format (default json)")

    sub.add_parser("list", help="list registered suites")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "list":
        for name in sorted(REGISTRY):
            print(name)
        return 0

    if args.suite not in REGISTRY:
        print(
            f"costglue: error: unknown suite {args.suite!r}; available: {', '.join(sorted(REGISTRY))}",
            file=sys.stderr,
        )
        return 2
    if not (0 <= args.seed <= MAX_SEED):
        print(f"costglue: error: seed must fit in 64 bits, got {args.seed}", file=sys.stderr)
        return 2
    if args.iters < 0:
        print(f"costglue: error: --iters must be non-negative, got {args.iters}", file=sys.stderr)
        return 2

    config = SuiteConfig(
        suite=args.suite,
        seed=args.seed,
        iterations=args.iters,
        mode=EvaluationMode(args.mode),
        report_path=args.report,
        format=args.format,
    )
    try:
        report = run_suite(config)
    except (CoherenceError, BoundViolation, ValueError, OverflowError) as err:
        print(f"costglue: internal invariant breach: {err}", file=sys.stderr)
        return 1

    text = emit_report(report, config.format)
    if config.report_path:
        with open(config.report_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report.passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
