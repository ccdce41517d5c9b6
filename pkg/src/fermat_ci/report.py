"""Report container and canonical serialization (json, csv, text)."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from . import __version__

TOOL = "fermat-ci"


class FormatError(ValueError):
    pass


def plain(obj: Any) -> Any:
    """Convert to json-compatible values; fractions become "p/q" strings."""
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [plain(x) for x in obj]
    return obj


@dataclass
class Report:
    subcommand: str
    inputs: dict
    verdict: str
    holds: bool
    result: dict
    provenance: list[str]
    table: Optional[tuple[list[str], list[list[Any]]]] = None
    timing: Optional[float] = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        out = {
            "tool": TOOL,
            "version": __version__,
            "subcommand": self.subcommand,
            "inputs": plain(self.inputs),
            "verdict": self.verdict,
            "holds": self.holds,
            "result": plain(self.result),
            "provenance": list(self.provenance),
        }
        if self.table is not None:
            columns, rows = self.table
            out["table"] = {"columns": list(columns), "rows": plain(rows)}
        if self.notes:
            out["notes"] = list(self.notes)
        if self.timing is not None:
            out["timing_seconds"] = round(self.timing, 3)
        return out

    @property
    def exit_code(self) -> int:
        return 0 if self.holds else 1


def emit(report: Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        if report.table is None:
            raise FormatError(f"csv output is only available for tabular reports, not {report.subcommand!r}")
        columns, rows = report.table
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([plain(x) for x in row])
        return buf.getvalue()
    if fmt == "text":
        return _text(report)
    raise FormatError(f"unknown format {fmt!r}")


def _fmt_value(v: Any) -> str:
    v = plain(v)
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    return str(v)


def _text(report: Report) -> str:
    d = report.to_dict()
    lines = [f"{TOOL} {d['version']} :: {report.subcommand}"]
    lines.append("inputs: " + ", ".join(f"{k}={_fmt_value(v)}" for k, v in sorted(d["inputs"].items())))
    lines.append(f"verdict: {report.verdict}")
    for key in sorted(d["result"]):
        lines.append(f"{key}: {_fmt_value(d['result'][key])}")
    if report.table is not None:
        columns, rows = report.table
        cells = [list(map(str, columns))] + [[_fmt_value(x) for x in row] for row in rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(columns))]
        for r in cells:
            lines.append("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip())
    for note in report.notes:
        lines.append(f"note: {note}")
    for p in report.provenance:
        lines.append(f"checks: {p}")
    if report.timing is not None:
        lines.append(f"time: {report.timing:.3f}s")
    return "\n".join(lines) + "\n"
