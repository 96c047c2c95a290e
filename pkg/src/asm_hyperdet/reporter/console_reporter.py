"""Console presentation helpers for verification reports and solver results."""

from __future__ import annotations

import json
from collections import Counter
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

from ..verify.identities import VerificationReport


def _format_block(title: str, lines: list[str]) -> str:
    divider = "=" * len(title)
    return "\n".join([title, divider, *lines])


def _parameters(parameters: Mapping[str, Any]) -> str:
    return ", ".join(f"{key}={value}" for key, value in parameters.items())


def _report_line(report: VerificationReport) -> str:
    convention = f" [{report.convention}]" if report.convention else ""
    line = f"{report.status.upper():<24} {report.identity}{convention} ({_parameters(report.parameters)})"
    if report.notes:
        line += " :: " + "; ".join(report.notes)
    return line


def render_reports(reports: Sequence[VerificationReport], trace: Mapping[str, Any] | None = None) -> str:
    """Return the text view of a suite run, one block per identity."""

    blocks: list[str] = []
    grouped: dict[str, list[VerificationReport]] = {}
    for report in reports:
        grouped.setdefault(report.identity, []).append(report)
    for identity, items in grouped.items():
        blocks.append(_format_block(identity, [_report_line(item) for item in items]))

    tally = Counter(report.status for report in reports)
    summary = [f"{status}: {count}" for status, count in sorted(tally.items())]
    resolution = (trace or {}).get("convention_resolution")
    if resolution:
        winners = resolution.get("winners") or ["none"]
        summary.append(f"sign-factor convention: {', '.join(winners)}")
        points = resolution.get("discriminating_points") or []
        if points:
            summary.append(f"discriminating points: {points}")
    blocks.append(_format_block("Summary", summary or ["no reports"]))
    return "\n\n".join(blocks)


def render_result(title: str, rows: Iterable[tuple[str, Any]]) -> str:
    """Render ``label: value`` rows of a single computation."""

    return _format_block(title, [f"{label}: {value}" for label, value in rows])


def reports_to_json(reports: Sequence[VerificationReport], include_runtime: bool = True) -> str:
    return json.dumps([report.to_json(include_runtime) for report in reports], ensure_ascii=False, indent=2)


def export_calculation_log(trace: Mapping[str, Any], output_path: Path) -> Path:
    """Persist the detailed run trace to disk."""
    output_path.parent.mkdir(parents=True, exist_ok=True)
    output_path.write_text(json.dumps(trace, ensure_ascii=False, indent=2, default=str), encoding="utf-8")
    return output_path


__all__ = ["export_calculation_log", "render_reports", "render_result", "reports_to_json"]
