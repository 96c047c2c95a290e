"""Integer partitions and the statistics Macdonald theory needs."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import factorial
from typing import Any, Iterable, Iterator, Tuple

Cell = Tuple[int, int]


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive parts; the empty partition has weight 0."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Iterable[int]) -> Partition:
        """Sort arbitrary positive parts into a partition (zeros dropped)."""
        return cls(tuple(sorted((int(p) for p in parts if int(p) != 0), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """``"2,2"``, ``"[2, 1]"`` or ``""`` (the empty partition)."""
        cleaned = text.strip().strip("[]()").strip()
        if not cleaned:
            return cls(())
        try:
            return cls(tuple(int(piece) for piece in cleaned.split(",")))
        except ValueError as exc:
            raise ValueError(f"cannot parse partition {text!r}") from exc

    @classmethod
    def rectangle(cls, k: int, s: int) -> Partition:
        return cls((k,) * s if k > 0 else ())

    def key(self) -> str:
        """JSON-array key, e.g. ``"[2,1]"``."""
        return json.dumps(list(self.parts), separators=(",", ":"))

    @classmethod
    def from_key(cls, key: str) -> Partition:
        return cls(tuple(json.loads(key)))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    @cached_property
    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))

    @cached_property
    def z(self) -> int:
        """``z_lambda = prod_i i^{m_i} m_i!``."""
        value = 1
        for part, count in self.multiplicities.items():
            value *= part**count * factorial(count)
        return value

    @cached_property
    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def cells(self) -> Iterator[Cell]:
        """1-based ``(row, column)`` cells of the diagram."""
        for i, part in enumerate(self.parts, start=1):
            for j in range(1, part + 1):
                yield i, j

    def arm(self, cell: Cell) -> int:
        i, j = cell
        return self.parts[i - 1] - j

    def leg(self, cell: Cell) -> int:
        i, j = cell
        return self.conjugate.parts[j - 1] - i

    def dominates(self, other: Partition) -> bool:
        """``self >= other`` in dominance order (equal weights required)."""
        if self.weight != other.weight:
            return False
        mine = theirs = 0
        for k in range(max(len(self), len(other))):
            mine += self.parts[k] if k < len(self) else 0
            theirs += other.parts[k] if k < len(other) else 0
            if mine < theirs:
                return False
        return True

    def compare_dominance(self, other: Partition) -> str:
        """One of ``equal``, ``dominates``, ``dominated``, ``incomparable``."""
        if self == other:
            return "equal"
        if self.dominates(other):
            return "dominates"
        if other.dominates(self):
            return "dominated"
        return "incomparable"

    def union(self, other: Partition) -> Partition:
        return Partition.of(self.parts + other.parts)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> Tuple[Partition, ...]:
    """All partitions of *n*, in increasing lexicographic order ((1^n) first, (n) last)."""

    if n < 0:
        raise ValueError(f"cannot partition a negative integer {n}")
    found: list[Tuple[int, ...]] = []

    def build(remaining: int, largest: int, prefix: Tuple[int, ...]) -> None:
        if remaining == 0:
            found.append(prefix)
            return
        for part in range(min(remaining, largest), 0, -1):
            build(remaining - part, part, prefix + (part,))

    build(n, n, ())
    return tuple(Partition(parts) for parts in sorted(found))


def partition_stats(partition: Partition, other: Partition | None = None) -> dict[str, Any]:
    """``z``, conjugate, arm and leg per cell, and optionally the dominance relation."""

    stats: dict[str, Any] = {
        "partition": list(partition.parts),
        "weight": partition.weight,
        "z": partition.z,
        "conjugate": list(partition.conjugate.parts),
        "arms_legs": {
            f"{i},{j}": {"arm": partition.arm((i, j)), "leg": partition.leg((i, j))} for i, j in partition.cells()
        },
    }
    if other is not None:
        stats["dominance"] = {"other": list(other.parts), "relation": partition.compare_dominance(other)}
    return stats


__all__ = ["Cell", "Partition", "partition_stats", "partitions_of"]
