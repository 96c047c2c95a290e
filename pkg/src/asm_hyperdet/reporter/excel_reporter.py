"""Excel workbook export of a verification run."""

from __future__ import annotations

import json
from collections import Counter
from pathlib import Path
from typing import Any, Mapping, Sequence

from openpyxl import Workbook
from openpyxl.utils import get_column_letter

from ..verify.identities import VerificationReport

REPORT_COLUMNS = ("Identity", "Convention", "Parameters", "Status", "Runtime (s)", "Notes")


def _write_summary_sheet(workbook: Workbook, reports: Sequence[VerificationReport], trace: Mapping[str, Any]) -> None:
    sheet = workbook.active
    sheet.title = "Summary"
    tally = Counter(report.status for report in reports)
    rows: list[tuple[str, Any]] = [(f"Reports ({status})", count) for status, count in sorted(tally.items())]
    rows.append(("Reports (total)", len(reports)))

    resolution = trace.get("convention_resolution") or {}
    rows.append(("Sign-factor convention", ", ".join(resolution.get("winners", [])) or "unresolved"))
    rows.append(("Discriminating points", json.dumps(resolution.get("discriminating_points", []))))

    meta = trace.get("meta", {})
    rows.extend(
        [
            ("Seed", trace.get("seed")),
            ("Timestamp (UTC)", meta.get("timestamp_utc")),
            ("Commit", meta.get("commit")),
        ]
    )
    for row_index, (label, value) in enumerate(rows, start=1):
        sheet.cell(row=row_index, column=1, value=label)
        sheet.cell(row=row_index, column=2, value=value)
    sheet.column_dimensions[get_column_letter(1)].width = 32
    sheet.column_dimensions[get_column_letter(2)].width = 44


def _write_report_sheet(workbook: Workbook, reports: Sequence[VerificationReport]) -> None:
    sheet = workbook.create_sheet("Reports")
    sheet.append(list(REPORT_COLUMNS))
    for report in reports:
        sheet.append(
            [
                report.identity,
                report.convention or "-",
                json.dumps(report.parameters),
                report.status,
                report.runtime_s,
                "; ".join(report.notes),
            ]
        )
    for column, width in enumerate((24, 12, 36, 24, 12, 60), start=1):
        sheet.column_dimensions[get_column_letter(column)].width = width


def _write_witness_sheet(workbook: Workbook, reports: Sequence[VerificationReport]) -> None:
    sheet = workbook.create_sheet("Witnesses")
    sheet.append(["Identity", "Parameters", "Witness"])
    for report in reports:
        if not report.witness:
            continue
        serialized = json.dumps(report.witness, ensure_ascii=False, indent=2, default=str)
        sheet.append([report.identity, json.dumps(report.parameters), serialized])
        sheet.row_dimensions[sheet.max_row].height = max(20, min(120, 12 * serialized.count("\n")))
    sheet.column_dimensions[get_column_letter(1)].width = 24
    sheet.column_dimensions[get_column_letter(2)].width = 30
    sheet.column_dimensions[get_column_letter(3)].width = 90


def export_reports_to_excel(
    reports: Sequence[VerificationReport], trace: Mapping[str, Any], output_path: Path
) -> Path:
    """Create a workbook with a summary, one row per report and the witnesses."""
    workbook = Workbook()
    _write_summary_sheet(workbook, reports, trace)
    _write_report_sheet(workbook, reports)
    _write_witness_sheet(workbook, reports)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    workbook.save(output_path)
    return output_path


__all__ = ["export_reports_to_excel"]
