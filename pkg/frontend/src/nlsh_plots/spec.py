"""FigureSpec loading and CSV input handling.

A FigureSpec is a small JSON document:

    {"kind": "profiles", "inputs": ["bound_state.csv"], "output": "fig.png"}

``kind`` selects the renderer, ``inputs`` lists the CSV files it consumes
(order matters for kinds that take more than one), and ``output`` is the
image path to write. ``title`` and ``dpi`` are optional.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path

KINDS = ("profiles", "convergence_loglog", "error_vs_time", "dsw_profile",
         "phase_portrait")

# csv columns each kind requires, per input file (in input order)
REQUIRED_COLUMNS: dict[str, tuple[tuple[str, ...], ...]] = {
    "profiles": (("variant", "tau", "x", "abs_u"),),
    "convergence_loglog": (("method", "tau", "dt", "err_q0", "err_q1"),),
    "error_vs_time": (("variant", "tau", "t", "error"),),
    "dsw_profile": (("variant", "tau", "x", "rho", "phi"),),
    "phase_portrait": (("q0", "q1", "dq0", "dq1"),
                       ("orbit_id", "sample", "q0", "q1", "first_integral")),
}


class SpecError(ValueError):
    """The FigureSpec document itself is malformed."""


class SchemaError(ValueError):
    """An input CSV does not carry the columns the kind requires."""


class EmptyInputError(ValueError):
    """An input CSV parses but holds no data rows."""


@dataclass(frozen=True)
class FigureSpec:
    kind: str
    inputs: tuple[str, ...]
    output: str
    title: str = ""
    dpi: int = 150

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SpecError(f"unknown kind {self.kind!r}; expected one of "
                            f"{', '.join(KINDS)}")
        want = len(REQUIRED_COLUMNS[self.kind])
        if len(self.inputs) != want:
            raise SpecError(f"kind {self.kind!r} takes {want} input file(s), "
                            f"got {len(self.inputs)}")
        if not self.output:
            raise SpecError("output path must be nonempty")


def load_spec(path: str | Path) -> FigureSpec:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}: not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise SpecError(f"{path}: expected a JSON object")
    known = {"kind", "inputs", "output", "title", "dpi"}
    unknown = set(doc) - known
    if unknown:
        raise SpecError(f"{path}: unknown keys {sorted(unknown)}")
    try:
        return FigureSpec(kind=doc["kind"],
                          inputs=tuple(doc["inputs"]),
                          output=doc["output"],
                          title=doc.get("title", ""),
                          dpi=int(doc.get("dpi", 150)))
    except KeyError as exc:
        raise SpecError(f"{path}: missing key {exc}") from None


@dataclass
class Table:
    """One parsed CSV: column names and string-valued rows."""

    path: Path
    columns: list[str]
    rows: list[dict[str, str]] = field(default_factory=list)

    def floats(self, column: str, where: dict[str, str] | None = None):
        import numpy as np
        sel = self.rows
        if where:
            sel = [r for r in sel
                   if all(r[k] == v for k, v in where.items())]
        return np.array([float(r[column]) for r in sel])

    def distinct(self, column: str) -> list[str]:
        seen = []
        for r in self.rows:
            if r[column] not in seen:
                seen.append(r[column])
        return seen


def read_table(path: str | Path, required: tuple[str, ...]) -> Table:
    path = Path(path)
    with open(path) as fh:
        lines = [ln for ln in fh if not ln.startswith("#")]
    parsed = list(csv.reader(lines))
    if not parsed:
        raise EmptyInputError(f"{path}: no header row")
    columns = parsed[0]
    missing = [c for c in required if c not in columns]
    if missing:
        raise SchemaError(f"{path}: missing column {missing[0]!r} "
                          f"(has {', '.join(columns)})")
    rows = [dict(zip(columns, row)) for row in parsed[1:] if row]
    if not rows:
        raise EmptyInputError(f"{path}: no data rows")
    return Table(path=path, columns=columns, rows=rows)


def read_inputs(spec: FigureSpec) -> list[Table]:
    return [read_table(p, req)
            for p, req in zip(spec.inputs, REQUIRED_COLUMNS[spec.kind])]
