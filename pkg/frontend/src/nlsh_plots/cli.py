"""Command-line entry point.

Usage:
    plots render --spec <figure.json>

On success the written image path is printed. On failure a machine-readable
``error: ...`` line goes to stderr and a nonzero code is returned.
"""

from __future__ import annotations

import argparse
import json
import sys

from .render import render
from .spec import EmptyInputError, SchemaError, SpecError, load_spec


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plots", description="Render figures from nlsh-lab CSV files.")
    sub = parser.add_subparsers(dest="command", required=True)
    r = sub.add_parser("render", help="render one FigureSpec")
    r.add_argument("--spec", required=True, help="FigureSpec JSON file")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        spec = load_spec(args.spec)
        out = render(spec)
    except (SpecError, SchemaError, EmptyInputError, OSError) as exc:
        payload = {"error": type(exc).__name__, "message": str(exc)}
        print("error: " + json.dumps(payload), file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
