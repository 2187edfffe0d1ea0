"""Command-line entry point.

Usage:
    nlsh-lab <experiment> [--config FILE] [--override key=value ...]
    nlsh-lab tableau (--name NAME | --list)

Experiments write CSV files into the configured output directory. On
failure a machine-readable ``error: ...`` line is printed to stderr and a
nonzero exit code is returned.
"""

from __future__ import annotations

import argparse
import json
import sys

from .experiments import (EXPERIMENTS, ConfigError, build_config,
                          load_config, parse_overrides, run_experiment)
from .integrator import StepFailure
from .tableaux import UnknownMethodError, get_method, method_names


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nlsh-lab",
        description="Spectral ImEx experiments for NLS and its hyperbolic "
                    "relaxation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name in EXPERIMENTS:
        p = sub.add_parser(name, help=f"run the {name} experiment")
        p.add_argument("--config", help="flat key=value config file")
        p.add_argument("--override", action="append", default=[],
                       metavar="KEY=VALUE",
                       help="override a single config key (repeatable)")

    t = sub.add_parser("tableau", help="inspect the method registry")
    group = t.add_mutually_exclusive_group(required=True)
    group.add_argument("--name", help="dump one tableau as plain text")
    group.add_argument("--list", action="store_true",
                       help="list registered method names")
    return parser


def _fail(command: str, exc: Exception) -> int:
    payload = {"error": type(exc).__name__, "command": command,
               "message": str(exc)}
    print("error: " + json.dumps(payload), file=sys.stderr)
    return 1


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)

    if args.command == "tableau":
        try:
            if args.list:
                for name in method_names():
                    print(name)
            else:
                print(get_method(args.name).dump())
        except UnknownMethodError as exc:
            return _fail("tableau", exc)
        return 0

    try:
        overrides = parse_overrides(args.override)
        if args.config:
            cfg = load_config(args.config, args.command, overrides)
        else:
            cfg = build_config(args.command, overrides=overrides)
        paths = run_experiment(cfg)
    except (ConfigError, StepFailure, OSError, ValueError) as exc:
        return _fail(args.command, exc)
    for path in paths:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
