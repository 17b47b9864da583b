"""Command line interface with machine-readable JSON reports.

Every command prints a single report object:
    {"command", "parameters", "results", "status", "elapsed_ms"}
Rationals are serialized as {"num": a, "den": b}; weight and distance
arrays are dense over indices 0..n. Exit codes: 0 ok, 1 verification
failed, 2 usage or parse error. With --stable the elapsed_ms field is
dropped so identical invocations emit byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Any, Sequence

from .bounds import bound_verdicts, is_amds, is_mds
from .classify import (
    VerificationReport,
    verify_all,
    verify_d1_d2_propositions,
    verify_mds_classification,
    verify_p_classification,
    verify_w_classification,
)
from .core import (
    BinaryCode,
    DistributionReport,
    is_linear,
    min_distance,
)
from .fileio import load_code
from .isometry import dedupe_up_to_isometry
from .systematic import enumerate_systematic_amds

_EXIT_CODES = {"ok": 0, "verification_failed": 1, "error": 2}


def _fraction_json(value: Fraction) -> dict[str, int]:
    return {"num": value.numerator, "den": value.denominator}


def _code_json(code: BinaryCode) -> list[str]:
    return [str(word) for word in code.words]


def _analyze(args: argparse.Namespace) -> tuple[str, dict[str, Any]]:
    code = load_code(args.file)
    if code.size < 2:
        raise ValueError("analysis requires at least two codewords")
    d = min_distance(code)
    report = DistributionReport.of(code)
    results = {
        "n": code.length,
        "size": code.size,
        "min_distance": d,
        "weight_distribution": list(report.weight_distribution)
        if report.weight_distribution is not None
        else None,
        "distance_distribution": [_fraction_json(b) for b in report.distance_distribution],
        "linear": is_linear(code),
        "mds": is_mds(code),
        "amds": is_amds(code),
        "bounds": [
            {"bound": v.bound, "max_size": v.max_size, "attained": v.attained}
            for v in bound_verdicts(code.length, d, code.size)
        ],
    }
    return "ok", results


def _enumerate(args: argparse.Namespace) -> tuple[str, dict[str, Any]]:
    result = enumerate_systematic_amds(
        args.n, args.d, count_only=args.count_only and not args.up_to_isometry, jobs=args.jobs
    )
    results: dict[str, Any] = {
        "count": result.count,
        "nodes_explored": result.nodes_explored,
    }
    if result.codes is not None and not args.count_only:
        results["codes"] = [_code_json(code) for code in result.codes]
    if args.up_to_isometry:
        classes = dedupe_up_to_isometry(list(result.codes or ()))
        results["isometry_classes"] = len(classes)
        if not args.count_only:
            results["representatives"] = [_code_json(code) for code in classes]
    return "ok", results


def _bounds(args: argparse.Namespace) -> tuple[str, dict[str, Any]]:
    verdicts = bound_verdicts(args.n, args.d)
    return "ok", {
        "verdicts": [
            {"bound": v.bound, "max_size": v.max_size, "attained": v.attained}
            for v in verdicts
        ]
    }


def _verify(args: argparse.Namespace) -> tuple[str, dict[str, Any]]:
    target = args.target
    reports: list[VerificationReport]
    if target == "mds":
        reports = [verify_mds_classification(args.max_n or 4)]
    elif target == "d1d2":
        reports = [verify_d1_d2_propositions(args.max_n or 5)]
    elif target == "p-class":
        reports = [verify_p_classification(args.max_n or 9, jobs=args.jobs)]
    elif target == "w-class":
        reports = [verify_w_classification(jobs=args.jobs)]
    else:
        reports = verify_all(jobs=args.jobs)
    ok = all(report.ok for report in reports)
    results = {report.target: report.to_jsonable() for report in reports}
    return ("ok" if ok else "verification_failed"), results


def _render_pretty(report: dict[str, Any]) -> str:
    lines = [f"{report['command']}: {report['status']}"]
    for key, value in report["parameters"].items():
        lines.append(f"  {key} = {value}")
    lines.append(json.dumps(report["results"], indent=2))
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output")
    common.add_argument(
        "--stable", action="store_true", help="omit timing fields for byte-stable output"
    )
    common.add_argument("--jobs", type=int, default=1, help="worker processes for searches")

    parser = argparse.ArgumentParser(
        prog="sysamds",
        description="Analyze binary codes and verify the systematic AMDS classification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", parents=[common], help="analyze a code file")
    p_analyze.add_argument("file", help="code or generator-matrix file")

    p_enum = sub.add_parser("enumerate", parents=[common], help="enumerate systematic AMDS codes")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--d", type=int, required=True)
    p_enum.add_argument("--count-only", action="store_true")
    p_enum.add_argument("--up-to-isometry", action="store_true")

    p_bounds = sub.add_parser("bounds", parents=[common], help="evaluate size bounds")
    p_bounds.add_argument("--n", type=int, required=True)
    p_bounds.add_argument("--d", type=int, required=True)

    p_verify = sub.add_parser("verify", parents=[common], help="run verification campaigns")
    p_verify.add_argument(
        "--target",
        choices=["mds", "p-class", "w-class", "d1d2", "all"],
        required=True,
    )
    p_verify.add_argument("--max-n", type=int, default=None)

    return parser


_HANDLERS = {
    "analyze": _analyze,
    "enumerate": _enumerate,
    "bounds": _bounds,
    "verify": _verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    parameters = {
        key: value
        for key, value in sorted(vars(args).items())
        if key not in {"command", "pretty", "stable"} and value is not None
    }
    started = time.monotonic()
    try:
        status, results = _HANDLERS[args.command](args)
    except (ValueError, OSError) as exc:
        status, results = "error", {"error": str(exc)}
    report: dict[str, Any] = {
        "command": args.command,
        "parameters": parameters,
        "results": results,
        "status": status,
    }
    if not args.stable:
        report["elapsed_ms"] = int((time.monotonic() - started) * 1000)
    if args.pretty:
        print(_render_pretty(report))
    else:
        print(json.dumps(report))
    return _EXIT_CODES[status]


if __name__ == "__main__":
    sys.exit(main())
