"""On-disk JSON cache of Macdonald P functions, one file per ``(m, basis)``."""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Any, Mapping

from ..utils.errors import CacheError
from .partitions import Partition
from .symmetric import SymFun, parse_coefficient

FILE_PREFIX = "macdonald_P"


class MacdonaldCache:
    """``{"m": 2, "basis": "p", "entries": {"[2,1]": {"[3]": "...", ...}}}`` per file."""

    def __init__(self, directory: str | os.PathLike[str]) -> None:
        self.directory = Path(directory)

    def path(self, m: int, basis: str) -> Path:
        return self.directory / f"{FILE_PREFIX}_m{m}_{basis}.json"

    def _read(self, path: Path) -> dict[str, Any]:
        try:
            payload = json.loads(path.read_text(encoding="utf-8"))
        except FileNotFoundError:
            return {}
        except (OSError, json.JSONDecodeError) as exc:
            raise CacheError(f"cannot read Macdonald cache {path}: {exc}") from exc
        if not isinstance(payload, dict) or not isinstance(payload.get("entries"), dict):
            raise CacheError(f"Macdonald cache {path} does not match the cache schema")
        return payload

    def load(self, m: int, basis: str = "p") -> dict[Partition, SymFun]:
        payload = self._read(self.path(m, basis))
        entries: dict[Partition, SymFun] = {}
        for key, coeffs in payload.get("entries", {}).items():
            shape = Partition.from_key(key)
            try:
                values = {Partition.from_key(k): parse_coefficient(str(v), "q") for k, v in coeffs.items()}
            except ValueError as exc:
                raise CacheError(f"corrupt coefficient for {key} in {self.path(m, basis)}: {exc}") from exc
            entries[shape] = SymFun(shape.weight, values, basis)
        return entries

    def store(self, m: int, basis: str, entries: Mapping[Partition, SymFun]) -> Path:
        """Merge *entries* into the file for ``(m, basis)`` and rewrite it atomically."""

        path = self.path(m, basis)
        payload = self._read(path) or {"m": m, "basis": basis, "entries": {}}
        for shape, value in entries.items():
            converted = value.to_basis(basis).to_json()
            payload["entries"][shape.key()] = converted["coefficients"]
        payload["entries"] = dict(
            sorted(payload["entries"].items(), key=lambda item: Partition.from_key(item[0]))
        )
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            scratch = path.with_suffix(".json.tmp")
            scratch.write_text(json.dumps(payload, indent=2), encoding="utf-8")
            scratch.replace(path)
        except OSError as exc:
            raise CacheError(f"cannot write Macdonald cache {path}: {exc}") from exc
        return path

    def files(self) -> list[Path]:
        if not self.directory.is_dir():
            return []
        return sorted(self.directory.glob(f"{FILE_PREFIX}_m*_*.json"))

    def stat(self) -> list[dict[str, Any]]:
        """One row per cached partition: ``{"m", "basis", "partition", "file"}``."""

        rows = []
        for path in self.files():
            payload = self._read(path)
            for key in payload.get("entries", {}):
                rows.append({"m": payload.get("m"), "basis": payload.get("basis"), "partition": key, "file": str(path)})
        return rows

    def clear(self) -> int:
        removed = 0
        for path in self.files():
            try:
                path.unlink()
            except OSError as exc:
                raise CacheError(f"cannot remove Macdonald cache {path}: {exc}") from exc
            removed += 1
        return removed

    def export(self, destination: str | os.PathLike[str] | None = None) -> list[dict[str, Any]]:
        """All cache documents as a list; written to *destination* when given."""

        documents = [self._read(path) for path in self.files()]
        if destination is not None:
            target = Path(destination)
            try:
                target.parent.mkdir(parents=True, exist_ok=True)
                target.write_text(json.dumps(documents, indent=2), encoding="utf-8")
            except OSError as exc:
                raise CacheError(f"cannot export Macdonald cache to {target}: {exc}") from exc
        return documents


__all__ = ["FILE_PREFIX", "MacdonaldCache"]
