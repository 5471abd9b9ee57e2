"""Command-line front door.

Subcommands:

* ``stress run``        — full pipeline: load, link, evaluate, report.
* ``stress validate``   — load and link only; exit 0 if clean, 2 if not.
* ``stress scenarios print`` — emit the four built-ins as canonical JSON.

Exit codes: 0 success, 2 input/validation error, 3 internal error.
Reports go to ``--out``; stdout carries one summary line per scenario.
Output files are written atomically, so a failed run never leaves a
partial report behind.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import StressError
from .ingest import (
    LinkedPortfolio,
    link_exposures,
    load_fragility,
    load_geounits,
    load_hazard_table,
    load_portfolio,
)
from .pipeline import run_scenario
from .report import emit_report
from .scenarios import Scenario, builtin_scenarios, parse_scenario, serialize_scenario

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INTERNAL = 3

_BUILTIN_INDEX = {"orderly": 0, "disorderly": 1, "physical": 2, "compound": 3}


@dataclass(frozen=True)
class RunConfig:
    """Everything a run needs; mirrors the ``stress run`` flags."""

    portfolio: str
    hazards: str
    fragility: str
    geounits: str
    scenario_paths: tuple[str, ...] = ()
    builtin: Optional[str] = None  # "all" or one of the builtin names
    out: str = ""
    format: str = "json"
    top_k: int = 10


def _load_linked(config: RunConfig) -> LinkedPortfolio:
    with open(config.portfolio, "rb") as fh:
        portfolio = load_portfolio(fh, filename=config.portfolio)
    with open(config.hazards, "rb") as fh:
        hazards = load_hazard_table(fh, filename=config.hazards)
    with open(config.fragility, "rb") as fh:
        fragility = load_fragility(fh, filename=config.fragility)
    with open(config.geounits, "rb") as fh:
        registry = load_geounits(fh, filename=config.geounits)
    return link_exposures(portfolio, hazards, fragility, registry)


def _load_scenarios(config: RunConfig) -> list[Scenario]:
    scenarios: list[Scenario] = []
    for path in config.scenario_paths:
        with open(path, "r", encoding="utf-8") as fh:
            scenarios.append(parse_scenario(fh.read()))
    if config.builtin is not None:
        builtins = builtin_scenarios()
        if config.builtin == "all":
            scenarios.extend(builtins)
        else:
            scenarios.append(builtins[_BUILTIN_INDEX[config.builtin]])
    return scenarios


def _write_atomic(path: str, data: bytes) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".stress-")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp_path, path)
    except BaseException:
        os.unlink(tmp_path)
        raise


def run(config: RunConfig) -> int:
    """Execute the full pipeline for every configured scenario."""
    if not config.scenario_paths and config.builtin is None:
        print("error: at least one --scenario or --builtin required", file=sys.stderr)
        return EXIT_INPUT
    if config.top_k < 1:
        print("error: --top-k must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        linked = _load_linked(config)
        scenarios = _load_scenarios(config)
        results = [run_scenario(linked, s, top_k=config.top_k) for s in scenarios]
        payload = emit_report(results, format=config.format)
        _write_atomic(config.out, payload)
    except (StressError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    for result, _ in results:
        print(
            f"{result.scenario_id}: total_el={result.total_el:.12g} "
            f"climate_var={result.climate_var:.12g}"
        )
    return EXIT_OK


def validate(config: RunConfig) -> int:
    """Load and link only, reporting the first validation failure."""
    try:
        _load_linked(config)
        if config.scenario_paths:
            _load_scenarios(config)
    except (StressError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print("ok")
    return EXIT_OK


def _add_input_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--portfolio", required=True)
    parser.add_argument("--hazards", required=True)
    parser.add_argument("--fragility", required=True)
    parser.add_argument("--geounits", required=True)
    parser.add_argument("--scenario", action="append", default=[], metavar="PATH")
    parser.add_argument(
        "--builtin",
        choices=["all", "orderly", "disorderly", "physical", "compound"],
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stress",
        description="Geospatial climate stress-testing engine",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_parser = sub.add_parser("run", help="run scenarios end-to-end")
    _add_input_flags(run_parser)
    run_parser.add_argument("--out", required=True)
    run_parser.add_argument("--format", choices=["json", "csv"], default="json")
    run_parser.add_argument("--top-k", type=int, default=10, dest="top_k")

    validate_parser = sub.add_parser("validate", help="validate inputs only")
    _add_input_flags(validate_parser)

    scenarios_parser = sub.add_parser("scenarios", help="scenario utilities")
    scenarios_sub = scenarios_parser.add_subparsers(dest="scenarios_command", required=True)
    scenarios_sub.add_parser("print", help="print the four built-ins as canonical JSON")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "scenarios":
        for scenario in builtin_scenarios():
            print(serialize_scenario(scenario))
        return EXIT_OK
    config = RunConfig(
        portfolio=args.portfolio,
        hazards=args.hazards,
        fragility=args.fragility,
        geounits=args.geounits,
        scenario_paths=tuple(args.scenario),
        builtin=args.builtin,
        out=getattr(args, "out", ""),
        format=getattr(args, "format", "json"),
        top_k=getattr(args, "top_k", 10),
    )
    if args.command == "run":
        return run(config)
    return validate(config)


if __name__ == "__main__":
    raise SystemExit(main())
