"""Comparison of computed values against the reference table, plus formatting.

A row agrees when |ours - printed| <= max(rel_tol * |printed|, one unit in
the last printed digit).  The unit floor matters for truncated reference
cells whose own rounding exceeds the nominal relative tolerance.
"""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass

from .constants import PhysicalConstants
from .reference import REFERENCE_CASES, ReferenceCase

_DECIMAL = re.compile(r"^[+-]?(\d+)(?:\.(\d*))?(?:[eE]([+-]?\d+))?$")


def last_digit_unit(printed: str) -> float:
    """Magnitude of one unit in the last digit of a decimal literal."""
    m = _DECIMAL.match(printed.strip())
    if not m:
        raise ValueError(f"not a plain decimal literal: {printed!r}")
    decimals = len(m.group(2) or "")
    exponent = int(m.group(3) or 0)
    return 10.0 ** (exponent - decimals)


def within_printed(ours: float, printed: str, rel_tol: float) -> bool:
    ref = float(printed)
    allowed = max(rel_tol * abs(ref), last_digit_unit(printed))
    return abs(ours - ref) <= allowed


@dataclass(frozen=True)
class CaseResult:
    key: str
    group: str
    description: str
    scheme: str
    ours: float
    printed: float
    printed_text: str
    rel_gap: float
    rel_tol: float
    ok: bool
    flagged: bool
    note: str
    experiment_key: str

    @property
    def status(self) -> str:
        if self.ok:
            return "ok"
        return "flagged" if self.flagged else "FAIL"

    def as_dict(self) -> dict:
        return {
            "key": self.key,
            "group": self.group,
            "description": self.description,
            "scheme": self.scheme,
            "ours_hz": self.ours,
            "reference_hz": self.printed,
            "reference_text": self.printed_text,
            "rel_gap": self.rel_gap,
            "rel_tol": self.rel_tol,
            "status": self.status,
            "note": self.note,
            "experiment_key": self.experiment_key,
        }


def evaluate_case(c: PhysicalConstants, row: ReferenceCase) -> CaseResult:
    ours = row.compute(c)
    ref = float(row.printed)
    rel_gap = (ours - ref) / ref if ref != 0.0 else float("inf")
    return CaseResult(
        key=row.key,
        group=row.group,
        description=row.description,
        scheme=row.scheme or "-",
        ours=ours,
        printed=ref,
        printed_text=row.printed,
        rel_gap=rel_gap,
        rel_tol=row.rel_tol,
        ok=within_printed(ours, row.printed, row.rel_tol),
        flagged=row.flagged,
        note=row.note,
        experiment_key=row.experiment_key or "",
    )


def evaluate_report(c: PhysicalConstants, scheme: str = "all") -> list[CaseResult]:
    """Evaluate the reference table, optionally restricted to one scheme.

    Scheme-independent rows are always included.
    """
    rows = REFERENCE_CASES
    if scheme != "all":
        rows = [r for r in rows if r.scheme in (None, scheme)]
    return [evaluate_case(c, r) for r in rows]


def report_exit_code(results: list[CaseResult], strict: bool = False) -> int:
    """Nonzero when any unflagged row is out of tolerance; with strict=True
    flagged rows count too."""
    for r in results:
        if not r.ok and (strict or not r.flagged):
            return 1
    return 0


def _row_cells(r: CaseResult) -> list[str]:
    return [r.key, r.scheme, f"{r.ours:.6e}", r.printed_text,
            f"{r.rel_gap:+.3e}", f"{r.rel_tol:.0e}", r.status, r.note]


_HEADER = ["case", "scheme", "ours_hz", "reference", "rel_gap", "rel_tol",
           "status", "note"]


def format_table(results: list[CaseResult]) -> str:
    matrix = [_HEADER] + [_row_cells(r) for r in results]
    widths = [max(len(row[i]) for row in matrix) for i in range(len(_HEADER))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
             for row in matrix]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def format_csv(results: list[CaseResult]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["case", "group", "scheme", "ours_hz", "reference_hz",
                     "reference_text", "rel_gap", "rel_tol", "status", "note"])
    for r in results:
        writer.writerow([r.key, r.group, r.scheme, repr(r.ours), repr(r.printed),
                         r.printed_text, f"{r.rel_gap:.6e}", f"{r.rel_tol:.0e}",
                         r.status, r.note])
    return buf.getvalue()


def format_json(results: list[CaseResult]) -> str:
    return json.dumps([r.as_dict() for r in results], indent=2)


__all__ = ["CaseResult", "last_digit_unit", "within_printed", "evaluate_case",
           "evaluate_report", "report_exit_code", "format_table", "format_csv",
           "format_json"]
