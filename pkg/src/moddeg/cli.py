"""Command-line interface.

Subcommands:

    invariants --a a1,a2,a3,a4,a6        model invariants, roots, periods
    bound --input F --output F [...]     JSONL degree-bound reports
    verify-lemmas [--json] [--n2 K]      the full constant-certification suite

Exit codes: 0 success, 1 certification or consistency failure,
2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import __version__
from .agm import lemma1_constants
from .bounds import crossover_check
from .curves import SingularCurveError
from .lvalue import lemma4_certify
from .report import build_report, dumps_report, invariants_document, parse_record
from .zerofree import (
    certify_cm_qi,
    certify_cm_zeta3,
    certify_noncm,
    quintic_beta_optimum,
)

EXIT_OK = 0
EXIT_CERTIFICATION_FAILURE = 1
EXIT_INPUT_ERROR = 2


def _parse_a_list(text: str) -> tuple[int, int, int, int, int]:
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != 5:
        raise ValueError("--a expects 5 comma-separated integers a1,a2,a3,a4,a6")
    return tuple(int(part) for part in parts)


def cmd_invariants(args: argparse.Namespace) -> int:
    try:
        a = _parse_a_list(args.a)
        doc = invariants_document(a)
    except SingularCurveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    print(dumps_report(doc))
    return EXIT_OK


def cmd_bound(args: argparse.Namespace) -> int:
    try:
        with open(args.input, "r", encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    out_lines: list[str] = []
    any_inconsistent = False
    for line_no, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            record = parse_record(json.loads(line))
            report = build_report(record, n2_override=args.n2, assume_cm=args.assume_cm)
        except (ValueError, ArithmeticError) as exc:
            out_lines.append(json.dumps({"line": line_no, "error": str(exc)}))
            continue
        if report["consistency_ok"] is False:
            any_inconsistent = True
        out_lines.append(dumps_report(report))

    text = "\n".join(out_lines) + ("\n" if out_lines else "")
    if args.output == "-":
        sys.stdout.write(text)
    else:
        try:
            with open(args.output, "w", encoding="utf-8") as handle:
                handle.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
            return EXIT_INPUT_ERROR
    return EXIT_CERTIFICATION_FAILURE if any_inconsistent else EXIT_OK


def _verification_rows(n2: int) -> list[dict[str, Any]]:
    rows: list[dict[str, Any]] = []

    constants = lemma1_constants()
    rows.append(
        {
            "name": "lemma1.case_pos_constant",
            "value": constants.k1,
            "op": "<=",
            "bound": 14.045,
            "pass": constants.k1 <= 14.045,
        }
    )
    rows.append(
        {
            "name": "lemma1.case_neg_constant",
            "value": constants.k2,
            "op": "<=",
            "bound": 14.045,
            "pass": constants.k2 <= 14.045,
        }
    )

    for cert in (certify_noncm(n2), certify_cm_qi(n2), certify_cm_zeta3(n2)):
        for wp in cert.waypoints:
            rows.append(
                {
                    "name": f"{cert.case_tag}.{wp.name}",
                    "value": wp.value,
                    "op": wp.op,
                    "bound": list(wp.bound) if isinstance(wp.bound, tuple) else wp.bound,
                    "pass": wp.passed,
                }
            )

    cert4 = lemma4_certify(n2)
    for wp in cert4.waypoints:
        rows.append(
            {
                "name": f"lvalue.{wp.name}",
                "value": wp.value,
                "op": wp.op,
                "bound": list(wp.bound) if isinstance(wp.bound, tuple) else wp.bound,
                "pass": wp.passed,
            }
        )

    quintic = quintic_beta_optimum()
    rows.append(
        {
            "name": "zeta3.beta_star",
            "value": quintic.beta_star,
            "op": "abs_diff<=",
            "bound": [2.629152166, 1e-8],
            "pass": abs(quintic.beta_star - 2.629152166) <= 1e-8,
        }
    )

    log_n_star = crossover_check()
    rows.append(
        {
            "name": "theorem2.crossover_log_n",
            "value": log_n_star,
            "op": "in",
            "bound": [86.0, 87.5],
            "pass": 86.0 <= log_n_star <= 87.5,
        }
    )
    return rows


def cmd_verify_lemmas(args: argparse.Namespace) -> int:
    try:
        rows = _verification_rows(args.n2)
    except ValueError as exc:
        if args.json:
            print(json.dumps({"error": str(exc), "pass": False}))
        else:
            print(f"FAIL  precondition: {exc}")
        return EXIT_CERTIFICATION_FAILURE

    all_pass = all(row["pass"] for row in rows)
    if args.json:
        doc = {"n2": args.n2, "waypoints": rows, "pass": all_pass}
        print(json.dumps(_rounded(doc)))
    else:
        width = max(len(row["name"]) for row in rows)
        for row in rows:
            status = "PASS" if row["pass"] else "FAIL"
            bound = row["bound"]
            bound_text = (
                f"[{bound[0]:.6g}, {bound[1]:.6g}]" if isinstance(bound, list) else f"{bound:.6g}"
            )
            print(f"{status}  {row['name']:<{width}}  {row['value']:+.10g}  {row['op']} {bound_text}")
        print(f"{'PASS' if all_pass else 'FAIL'}  overall ({len(rows)} waypoints, n2 = {args.n2})")
    return EXIT_OK if all_pass else EXIT_CERTIFICATION_FAILURE


def _rounded(value: Any) -> Any:
    if isinstance(value, float):
        return float(f"{value:.12g}")
    if isinstance(value, dict):
        return {k: _rounded(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_rounded(v) for v in value]
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moddeg",
        description="Certified lower bounds on modular degrees of rational elliptic curves.",
    )
    parser.add_argument("--version", action="version", version=f"moddeg {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="model invariants, 2-torsion roots, periods")
    p_inv.add_argument("--a", required=True, help="a-invariants a1,a2,a3,a4,a6")
    p_inv.set_defaults(func=cmd_invariants)

    p_bound = sub.add_parser("bound", help="degree-bound reports for a JSONL dataset")
    p_bound.add_argument("--input", required=True, help="input JSONL path")
    p_bound.add_argument("--output", required=True, help="output JSONL path, or - for stdout")
    p_bound.add_argument("--n2", type=int, default=None, help="override the symmetric-square conductor")
    p_bound.add_argument(
        "--assume-cm", choices=("auto", "cm", "noncm"), default="auto", dest="assume_cm"
    )
    p_bound.set_defaults(func=cmd_bound)

    p_verify = sub.add_parser("verify-lemmas", help="run the constant-certification suite")
    p_verify.add_argument("--json", action="store_true", help="machine-readable output")
    p_verify.add_argument("--n2", type=int, default=142, help="symmetric-square conductor (>= 142)")
    p_verify.set_defaults(func=cmd_verify_lemmas)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
