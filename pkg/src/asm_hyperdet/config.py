"""Configuration loading: repository defaults, environment overrides, then explicit flags."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Mapping, Tuple

from .utils.errors import ConfigError

PROJECT_ROOT = Path(__file__).resolve().parents[2]
DEFAULTS_PATH = PROJECT_ROOT / "defaults" / "defaults.json"

ENV_CACHE_DIR = "HYPERDET_CACHE_DIR"
ENV_BUDGET = "HYPERDET_BUDGET"

OUTPUT_FORMATS = ("text", "json")


@dataclass(frozen=True)
class VerifySettings:
    """Parameters of the verification suite."""

    vandermonde_max_n: int = 5
    asm_count_max_n: int = 6
    cayley_cases: Tuple[Tuple[int, int], ...] = ((2, 1), (3, 1), (2, 2), (3, 2))
    cayley_trials: int = 20
    invariance_cases: Tuple[Tuple[int, int], ...] = ((2, 1), (2, 2), (3, 1), (3, 2))
    invariance_trials: int = 3
    schur_points: Tuple[Tuple[int, ...], ...] = ((1, 2), (1, 2, 3, 4), (1, 2, 3, 4, 5, 6))
    max_ks: int = 6
    max_s: int = 3
    max_m: int = 2
    macdonald_max_weight: int = 6
    macdonald_m_values: Tuple[int, ...] = (1, 2, 3)
    schur_weight: int = 5


@dataclass(frozen=True)
class Config:
    budget_terms: int = 10**7
    degree_ceiling: int = 8
    asm_ceiling: int = 7
    det_lambda_max_side: int = 6
    pfaffian_max_side: int = 8
    dyson_max_s: int = 4
    dyson_max_m: int = 3
    cache_dir: Path = Path("output/cache")
    seed: int = 20240917
    output: str = "text"
    verify: VerifySettings = field(default_factory=VerifySettings)

    def __post_init__(self) -> None:
        if self.budget_terms <= 0:
            raise ConfigError(f"budget_terms must be positive, got {self.budget_terms}")
        if self.degree_ceiling < 1:
            raise ConfigError(f"degree_ceiling must be at least 1, got {self.degree_ceiling}")
        if self.output not in OUTPUT_FORMATS:
            raise ConfigError(f"output must be one of {OUTPUT_FORMATS}, got {self.output!r}")


def load_defaults(defaults_path: Path = DEFAULTS_PATH) -> Dict[str, Any]:
    """Load the repository defaults file."""

    try:
        with defaults_path.open("r", encoding="utf-8") as handle:
            return json.load(handle)
    except FileNotFoundError as exc:
        raise ConfigError(f"defaults file not found: {defaults_path}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"defaults file {defaults_path} is not valid JSON: {exc}") from exc


def deep_merge(base: Mapping[str, Any], override: Mapping[str, Any]) -> Dict[str, Any]:
    """Recursively merge two dictionaries without mutating the inputs."""

    merged: Dict[str, Any] = dict(base)
    for key, value in override.items():
        if key in merged and isinstance(merged[key], Mapping) and isinstance(value, Mapping):
            merged[key] = deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def environment_overrides(environ: Mapping[str, str]) -> Dict[str, Any]:
    overrides: Dict[str, Any] = {}
    if environ.get(ENV_CACHE_DIR):
        overrides["cache_dir"] = environ[ENV_CACHE_DIR]
    if environ.get(ENV_BUDGET):
        try:
            overrides["budget_terms"] = int(environ[ENV_BUDGET])
        except ValueError as exc:
            raise ConfigError(f"{ENV_BUDGET} must be an integer, got {environ[ENV_BUDGET]!r}") from exc
    return overrides


def _pairs(values: Any) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(int(v) for v in item) for item in values)


def _verify_settings(raw: Mapping[str, Any]) -> VerifySettings:
    grid = raw.get("grid", {})
    macdonald = raw.get("macdonald", {})
    base = VerifySettings()
    return VerifySettings(
        vandermonde_max_n=int(raw.get("vandermonde_max_n", base.vandermonde_max_n)),
        asm_count_max_n=int(raw.get("asm_count_max_n", base.asm_count_max_n)),
        cayley_cases=_pairs(raw.get("cayley_cases", base.cayley_cases)),  # type: ignore[arg-type]
        cayley_trials=int(raw.get("cayley_trials", base.cayley_trials)),
        invariance_cases=_pairs(raw.get("invariance_cases", base.invariance_cases)),  # type: ignore[arg-type]
        invariance_trials=int(raw.get("invariance_trials", base.invariance_trials)),
        schur_points=_pairs(raw.get("schur_points", base.schur_points)),
        max_ks=int(grid.get("max_ks", base.max_ks)),
        max_s=int(grid.get("max_s", base.max_s)),
        max_m=int(grid.get("max_m", base.max_m)),
        macdonald_max_weight=int(macdonald.get("max_weight", base.macdonald_max_weight)),
        macdonald_m_values=tuple(int(m) for m in macdonald.get("m_values", base.macdonald_m_values)),
        schur_weight=int(macdonald.get("schur_weight", base.schur_weight)),
    )


def load_config(
    overrides: Mapping[str, Any] | None = None,
    environ: Mapping[str, str] | None = None,
    defaults_path: Path = DEFAULTS_PATH,
) -> Config:
    """Defaults, then ``HYPERDET_*`` environment variables, then *overrides* (flags win).

    ``None`` values in *overrides* are ignored so unset CLI flags fall through.
    """

    merged = load_defaults(defaults_path)
    merged = deep_merge(merged, environment_overrides(os.environ if environ is None else environ))
    explicit = {key: value for key, value in (overrides or {}).items() if value is not None}
    merged = deep_merge(merged, explicit)
    try:
        return Config(
            budget_terms=int(merged["budget_terms"]),
            degree_ceiling=int(merged["degree_ceiling"]),
            asm_ceiling=int(merged["asm_ceiling"]),
            det_lambda_max_side=int(merged["det_lambda_max_side"]),
            pfaffian_max_side=int(merged["pfaffian_max_side"]),
            dyson_max_s=int(merged["dyson_max_s"]),
            dyson_max_m=int(merged["dyson_max_m"]),
            cache_dir=Path(merged["cache_dir"]).expanduser(),
            seed=int(merged["seed"]),
            output=str(merged.get("output", "text")),
            verify=_verify_settings(merged.get("verify", {})),
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(f"invalid configuration: {exc}") from exc


__all__ = [
    "Config",
    "DEFAULTS_PATH",
    "ENV_BUDGET",
    "ENV_CACHE_DIR",
    "VerifySettings",
    "deep_merge",
    "environment_overrides",
    "load_config",
    "load_defaults",
]
