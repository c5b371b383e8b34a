"""Command-line interface.

Subcommands::

    choreogame validate <file>
    choreogame analyze <file> [--values] [--core] [--imputation] [--threshold]
                              [--vcg] [--detect [--tolerance R]] [--oracle]
    choreogame generate [--seed N] [--services N] [--layers N] [--players N]
                        [--max-cost N] [--budget R] [--with-prices] [-o FILE]

Reports go to stdout as JSON with deterministic field order; diagnostics go
to stderr.  Exit codes: 0 success, 2 invalid document or parameters,
3 analysis precondition failure, 4 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any

from . import __version__
from .exceptions import (
    AnalysisError,
    ChoreogameError,
    GameDocumentError,
    TooManyPlayers,
)
from .bargaining import find_justified_objection, stable_imputation
from .core import core_empty
from .detection import detect
from .documents import dumps, load_file, rational_cell
from .model import GameInstance, as_rational, shortest_path
from .generator import generate_document
from .values import enumerate_values
from .vcg import check_equivalence, vcg_payments

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_PRECONDITION = 3
EXIT_CAP = 4


def _fail(exc: ChoreogameError) -> int:
    payload = {"errors": [{"code": exc.code, "message": str(exc)}]}
    print(json.dumps(payload), file=sys.stderr)
    if isinstance(exc, TooManyPlayers):
        return EXIT_CAP
    if isinstance(exc, AnalysisError):
        return EXIT_PRECONDITION
    return EXIT_INVALID


def cmd_validate(args: argparse.Namespace) -> int:
    try:
        instance = load_file(args.file)
    except OSError as exc:
        print(json.dumps({"errors": [{"code": "IOError", "message": str(exc)}]}), file=sys.stderr)
        return EXIT_INVALID
    except GameDocumentError as exc:
        return _fail(exc)
    cheapest = shortest_path(instance)
    print(
        f"{len(instance.graph.service_ids)} services, "
        f"{len(instance.players)} players, "
        f"shortest path cost = {cheapest.cost}"
    )
    return EXIT_OK


def _coalition_key(coalition: frozenset[str]) -> list[str]:
    return sorted(coalition)


def _section_values(instance: GameInstance) -> dict[str, Any]:
    table = enumerate_values(instance)
    entries = []
    for coalition, value in table.items():
        if not coalition:
            continue
        entry: dict[str, Any] = {
            "coalition": _coalition_key(coalition),
            "value": rational_cell(value.value),
            "reason": value.reason.value,
        }
        if value.winning_path is not None:
            entry["winning_path"] = list(value.winning_path)
        entries.append(entry)
    return {"coalitions": entries}


def _section_core(instance: GameInstance) -> dict[str, Any]:
    report = core_empty(instance)
    section: dict[str, Any] = {"empty": report.empty}
    if report.witness is not None:
        section["witness"] = {p: rational_cell(v) for p, v in sorted(report.witness.items())}
    return section


def _solution_section(instance: GameInstance) -> dict[str, Any]:
    solution = stable_imputation(instance)
    return {
        "active": sorted(solution.active_set),
        "imputation": {
            p: rational_cell(v) for p, v in sorted(solution.imputation.items())
        },
        "exists": solution.exists,
        "grand_value": rational_cell(solution.grand_value),
    }


def _section_threshold(instance: GameInstance) -> dict[str, Any]:
    from .bargaining import stability_threshold

    threshold, critical = stability_threshold(instance)
    return {
        "critical_set": sorted(critical),
        "threshold": rational_cell(threshold),
    }


def _section_vcg(instance: GameInstance) -> dict[str, Any]:
    report = vcg_payments(instance.graph)
    equivalence = check_equivalence(instance.graph)
    return {
        "chosen_path": list(report.chosen_path),
        "payments": {
            vid: rational_cell(payment)
            for vid, payment in sorted(report.payments.items())
        },
        "total_payment": rational_cell(report.total_payment),
        "minimal_stable_price": rational_cell(equivalence.minimal_stable_price),
        "equal": equivalence.equal,
    }


def _section_detect(instance: GameInstance, tolerance: Fraction) -> dict[str, Any]:
    report = detect(instance, tolerance)
    return {
        "alliance": report.alliance,
        "tolerance": rational_cell(report.tolerance),
        "per_player": {
            player: {
                "margin": rational_cell(check.margin),
                "expected": rational_cell(check.expected),
                "matches": check.matches,
            }
            for player, check in sorted(report.per_player.items())
        },
    }


def _section_oracle(instance: GameInstance) -> dict[str, Any]:
    solution = stable_imputation(instance)
    section: dict[str, Any] = {"exists": solution.exists}
    if solution.exists:
        objection = find_justified_objection(instance, solution.imputation)
        section["stable"] = objection is None
        if objection is not None:
            section["justified_objection"] = {
                "proposer": objection.proposer,
                "target": objection.target,
                "coalition": _coalition_key(objection.coalition),
            }
    return section


def cmd_analyze(args: argparse.Namespace) -> int:
    try:
        instance = load_file(args.file)
    except OSError as exc:
        print(json.dumps({"errors": [{"code": "IOError", "message": str(exc)}]}), file=sys.stderr)
        return EXIT_INVALID
    except GameDocumentError as exc:
        return _fail(exc)

    sections = [
        ("values", args.values, _section_values),
        ("core", args.core, _section_core),
        ("imputation", args.imputation, _solution_section),
        ("threshold", args.threshold, _section_threshold),
        ("vcg", args.vcg, _section_vcg),
        (
            "detect",
            args.detect,
            lambda inst: _section_detect(inst, as_rational(args.tolerance)),
        ),
        ("oracle", args.oracle, _section_oracle),
    ]
    if not any(flag for _, flag, _ in sections):
        print("analyze: request at least one report section", file=sys.stderr)
        return EXIT_INVALID

    report: dict[str, Any] = {}
    try:
        for name, wanted, build in sections:
            if wanted:
                report[name] = build(instance)
    except ChoreogameError as exc:
        return _fail(exc)
    print(json.dumps(report, indent=2))
    return EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    try:
        doc = generate_document(
            seed=args.seed,
            services=args.services,
            layers=args.layers,
            players=args.players,
            max_cost=args.max_cost,
            budget=args.budget,
            with_prices=args.with_prices,
        )
    except GameDocumentError as exc:
        return _fail(exc)
    text = json.dumps(doc, indent=2) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="choreogame",
        description="Exact coalition analysis of service-composition pricing games.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="validate a game document")
    p_validate.add_argument("file")
    p_validate.set_defaults(func=cmd_validate)

    p_analyze = sub.add_parser("analyze", help="run analyses on a game document")
    p_analyze.add_argument("file")
    p_analyze.add_argument("--values", action="store_true", help="coalition value table")
    p_analyze.add_argument("--core", action="store_true", help="core emptiness and witness")
    p_analyze.add_argument("--imputation", action="store_true", help="stable payoff division")
    p_analyze.add_argument("--threshold", action="store_true", help="stability budget threshold")
    p_analyze.add_argument("--vcg", action="store_true", help="truthful payments and cross-check")
    p_analyze.add_argument("--detect", action="store_true", help="alliance detection from prices")
    p_analyze.add_argument("--tolerance", default="0", help="margin tolerance for --detect")
    p_analyze.add_argument("--oracle", action="store_true", help="objection-oracle stability check")
    p_analyze.set_defaults(func=cmd_analyze)

    p_generate = sub.add_parser("generate", help="emit a seeded random game document")
    p_generate.add_argument("--seed", type=int, default=0)
    p_generate.add_argument("--services", type=int, default=6)
    p_generate.add_argument("--layers", type=int, default=3)
    p_generate.add_argument("--players", type=int, default=None)
    p_generate.add_argument("--max-cost", type=int, default=20)
    p_generate.add_argument("--budget", default=None, help="override the generated budget")
    p_generate.add_argument("--with-prices", action="store_true")
    p_generate.add_argument("-o", "--output", default=None)
    p_generate.set_defaults(func=cmd_generate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
