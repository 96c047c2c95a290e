"""Verification suite orchestration with optional progress reporting."""

from __future__ import annotations

import subprocess
from dataclasses import dataclass
from datetime import datetime, timezone
from threading import Event
from time import perf_counter
from typing import Any, Callable, Dict, Iterable, List, Sequence, Tuple

from .config import Config, load_config
from .hyper.hyperdet_solver import PhiConvention
from .symfun.cache import MacdonaldCache
from .utils.warnings import format_warning
from .verify.identities import (
    IDENTITIES,
    VerificationReport,
    resolve_phi_convention,
    verify_3x3_display,
    verify_asm_counts,
    verify_dyson_oracle,
    verify_lambda_vandermonde,
    verify_limit_to_cayley,
    verify_macdonald_consistency,
    verify_matsumoto_limit,
    verify_relative_invariance,
    verify_schur_pfaffian,
    verify_theorem_3_2,
)

ProgressCallback = Callable[[str, float], None]
GridPoint = Tuple[int, int, int]


class SuiteCancelled(RuntimeError):
    """Raised when the verification suite is cancelled by the caller."""


@dataclass
class SuiteArtifacts:
    """Reports in identity order, the run trace and the configuration used."""

    reports: List[VerificationReport]
    trace: Dict[str, Any]
    config: Config

    @property
    def failed(self) -> bool:
        return any(not report.passed for report in self.reports)


def grid_points(max_ks: int, max_s: int, max_m: int) -> List[GridPoint]:
    """All ``(k, s, m)`` with ``k >= 1``, ``k*s <= max_ks``, ``s <= max_s``, ``m <= max_m``."""

    return [
        (k, s, m)
        for m in range(1, max_m + 1)
        for s in range(1, max_s + 1)
        for k in range(1, max_ks // s + 1)
    ]


def _resolve_git_commit() -> str:
    """Return the current repository HEAD commit hash if available."""

    try:
        commit_bytes = subprocess.check_output(["git", "rev-parse", "HEAD"], stderr=subprocess.DEVNULL)
        return commit_bytes.decode("utf-8").strip()
    except (subprocess.CalledProcessError, FileNotFoundError):  # pragma: no cover - git optional
        return "unknown"


def select_identities(requested: Iterable[str] | None) -> List[str]:
    """Validate identity names and return them in suite order."""

    if requested is None:
        return list(IDENTITIES)
    names = list(requested)
    if "all" in names:
        return list(IDENTITIES)
    unknown = [name for name in names if name not in IDENTITIES]
    if unknown:
        raise ValueError(format_warning("UNKNOWN_IDENTITY", f"{unknown}; known: {', '.join(IDENTITIES)}"))
    return [name for name in IDENTITIES if name in names]


def run_verification_suite(
    identities: Iterable[str] | None = None,
    config: Config | None = None,
    *,
    points: Sequence[GridPoint] | None = None,
    conventions: Sequence[PhiConvention] = tuple(PhiConvention),
    seed: int | None = None,
    progress_callback: ProgressCallback | None = None,
    cancel_event: Event | None = None,
) -> SuiteArtifacts:
    """Run the selected identities in fixed order and collect their reports."""

    def _notify(step: str, fraction: float) -> None:
        if progress_callback is not None:
            progress_callback(step, max(0.0, min(1.0, fraction)))

    def _check_cancel() -> None:
        if cancel_event is not None and cancel_event.is_set():
            raise SuiteCancelled()

    config = config or load_config()
    settings = config.verify
    names = select_identities(identities)
    run_seed = config.seed if seed is None else seed
    budget = config.budget_terms
    cache = MacdonaldCache(config.cache_dir)
    grid = list(points) if points is not None else grid_points(settings.max_ks, settings.max_s, settings.max_m)

    reports: List[VerificationReport] = []
    per_identity: Dict[str, Dict[str, Any]] = {}
    resolution: VerificationReport | None = None
    winner = PhiConvention.PROOF_CONSISTENT

    # the convention resolution needs the rectangular reports even when they were not asked for
    run_theorem = "theorem_3_2" in names or "phi_resolution" in names or "matsumoto_limit" in names

    def _theorem_reports() -> List[VerificationReport]:
        items = []
        for k, s, m in grid:
            for convention in conventions:
                _check_cancel()
                items.append(verify_theorem_3_2(k, s, m, convention, cache, budget, config.degree_ceiling))
        return items

    theorem_reports: List[VerificationReport] = []
    computed: Dict[tuple, VerificationReport] = {}
    if run_theorem:
        _notify("theorem_3_2", 0.0)
        theorem_reports = _theorem_reports()
        resolution, theorem_reports = resolve_phi_convention(theorem_reports)
        computed = {
            (r.parameters["k"], r.parameters["s"], r.parameters["m"], r.convention): r for r in theorem_reports
        }
        winners = resolution.witness.get("winners", []) if resolution.witness else []
        if len(winners) == 1:
            winner = PhiConvention.parse(winners[0])

    for position, name in enumerate(names):
        _check_cancel()
        _notify(name, position / len(names))
        started = perf_counter()
        items: List[VerificationReport]
        if name == "asm_counts":
            items = [verify_asm_counts(settings.asm_count_max_n, config.asm_ceiling)]
        elif name == "lambda_vandermonde":
            items = [verify_lambda_vandermonde(n) for n in range(1, settings.vandermonde_max_n + 1)]
        elif name == "display_3x3":
            items = [verify_3x3_display()]
        elif name == "schur_pfaffian":
            items = [verify_schur_pfaffian(point, config.pfaffian_max_side) for point in settings.schur_points]
        elif name == "limit_to_cayley":
            items = []
            for n, m in settings.cayley_cases:
                _check_cancel()
                items.extend(verify_limit_to_cayley(n, m, settings.cayley_trials, run_seed, conventions, budget))
        elif name == "relative_invariance":
            items = [
                verify_relative_invariance(n, m, settings.invariance_trials, run_seed, budget)
                for n, m in settings.invariance_cases
            ]
        elif name == "macdonald_consistency":
            items = [
                verify_macdonald_consistency(
                    settings.macdonald_max_weight,
                    settings.macdonald_m_values,
                    settings.schur_weight,
                    cache,
                    config.degree_ceiling,
                )
            ]
        elif name == "theorem_3_2":
            items = theorem_reports
        elif name == "phi_resolution":
            items = [resolution] if resolution is not None else []
        elif name == "dyson_oracle":
            items = []
            for k, s, m in grid:
                _check_cancel()
                items.append(
                    verify_dyson_oracle(
                        k, s, m, cache, budget, config.degree_ceiling, config.dyson_max_s, config.dyson_max_m
                    )
                )
        else:
            items = []
            for k, s, m in grid:
                _check_cancel()
                symbolic = computed.get((k, s, m, winner.value))
                items.append(
                    verify_matsumoto_limit(k, s, m, winner, cache, budget, config.degree_ceiling, symbolic)
                )
        reports.extend(items)
        per_identity[name] = {
            "reports": len(items),
            "failures": sum(1 for item in items if not item.passed),
            "runtime_s": round(perf_counter() - started, 6),
        }
    _notify("done", 1.0)

    trace = {
        "identities": names,
        "grid": [list(point) for point in grid],
        "conventions": [convention.value for convention in conventions],
        "seed": run_seed,
        "per_identity": per_identity,
        "convention_resolution": resolution.witness if resolution is not None else None,
        "meta": {
            "timestamp_utc": datetime.now(timezone.utc).isoformat(timespec="seconds"),
            "commit": _resolve_git_commit(),
            "cache_dir": str(config.cache_dir),
        },
    }
    return SuiteArtifacts(reports=reports, trace=trace, config=config)


__all__ = [
    "GridPoint",
    "ProgressCallback",
    "SuiteArtifacts",
    "SuiteCancelled",
    "grid_points",
    "run_verification_suite",
    "select_identities",
]
