"""Alternating sign matrices: validation, enumeration, statistics and the counting formula."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import permutations
from math import factorial
from typing import Any, Iterator, Mapping, Sequence, Tuple

from ..utils.errors import InputFormatError
from ..utils.warnings import format_warning

DEFAULT_ASM_CEILING = 7

GenPerm = Tuple[int, ...]


class AsmError(ValueError):
    """Raised for malformed matrices or enumeration requests above the ceiling."""


@dataclass(frozen=True)
class Asm:
    """A validated ``n x n`` alternating sign matrix stored row-major."""

    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not is_alternating_sign_matrix(self.rows):
            raise AsmError(f"not an alternating sign matrix: {[list(r) for r in self.rows]}")

    @property
    def n(self) -> int:
        return len(self.rows)

    @cached_property
    def nonzero(self) -> Tuple[Tuple[int, int, int], ...]:
        """``(i, j, value)`` triples, 0-based, in row-major order."""
        return tuple((i, j, v) for i, row in enumerate(self.rows) for j, v in enumerate(row) if v)

    @cached_property
    def inversion_number(self) -> int:
        # i(X) = sum over pairs (i, j), (r, s) with r > i and s < j of x_ij * x_rs
        total = 0
        cells = self.nonzero
        for i, j, v in cells:
            for r, s, w in cells:
                if r > i and s < j:
                    total += v * w
        return total

    @cached_property
    def negative_count(self) -> int:
        return sum(1 for _, _, v in self.nonzero if v < 0)

    @cached_property
    def generalized_permutation(self) -> GenPerm:
        """``X(i) = sum_j j * x_ij`` with 1-based column labels."""
        return tuple(sum((j + 1) * v for j, v in enumerate(row)) for row in self.rows)

    @property
    def is_permutation(self) -> bool:
        return self.negative_count == 0

    def transpose(self) -> Asm:
        return Asm(tuple(zip(*self.rows)))

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "rows": [list(row) for row in self.rows]}

    @classmethod
    def from_json(cls, payload: Mapping[str, Any]) -> Asm:
        try:
            rows = tuple(tuple(int(v) for v in row) for row in payload["rows"])
            declared = int(payload.get("n", len(rows)))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputFormatError(f"asm: expected {{'n': int, 'rows': [[...]]}}: {exc}") from exc
        if declared != len(rows):
            raise InputFormatError(f"asm: declared n={declared} but {len(rows)} rows given")
        return cls(rows)

    @classmethod
    def _trusted(cls, rows: Tuple[Tuple[int, ...], ...]) -> Asm:
        asm = object.__new__(cls)
        object.__setattr__(asm, "rows", rows)
        return asm

    @classmethod
    def from_permutation(cls, perm: Sequence[int]) -> Asm:
        """Permutation matrix with a 1 at ``(i, perm[i])``; ``perm`` is 1-based."""
        n = len(perm)
        return cls(tuple(tuple(1 if perm[i] == j + 1 else 0 for j in range(n)) for i in range(n)))

    def __str__(self) -> str:
        return "\n".join(" ".join(f"{v:2d}" for v in row) for row in self.rows)


def _as_square(matrix: Sequence[Sequence[int]]) -> list[list[int]]:
    rows = [list(row) for row in matrix]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise AsmError(f"matrix is not square: row lengths {[len(r) for r in rows]} for {n} rows")
    return rows


def _prefix_sums_ok(line: Sequence[int]) -> bool:
    partial = 0
    for value in line:
        partial += value
        if partial not in (0, 1):
            return False
    return partial == 1


def is_alternating_sign_matrix(matrix: Sequence[Sequence[int]]) -> bool:
    """Every row and column has prefix sums in {0, 1} ending at 1."""

    rows = _as_square(matrix)
    if not rows:
        return False
    if any(v not in (-1, 0, 1) for row in rows for v in row):
        return False
    return all(_prefix_sums_ok(row) for row in rows) and all(_prefix_sums_ok(col) for col in zip(*rows))


def count_formula(n: int) -> int:
    """``prod_{i=0}^{n-1} (3i+1)! / (n+i)!`` evaluated exactly."""

    if n < 0:
        raise AsmError(f"matrix side must be non-negative, got {n}")
    value = Fraction(1)
    for i in range(n):
        value *= Fraction(factorial(3 * i + 1), factorial(n + i))
    if value.denominator != 1:
        raise ArithmeticError(f"count formula produced a non-integer for n={n}")
    return value.numerator


@lru_cache(maxsize=None)
def _row_candidates(state: Tuple[int, ...]) -> Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]:
    """Admissible next rows for a column partial-sum state, in lexicographic order."""

    n = len(state)
    found: list[Tuple[Tuple[int, ...], Tuple[int, ...]]] = []
    row = [0] * n

    def extend(position: int, running: int) -> None:
        if position == n:
            if running == 1:
                new_state = tuple(c + v for c, v in zip(state, row))
                found.append((tuple(row), new_state))
            return
        for value in (-1, 0, 1):
            next_running = running + value
            column = state[position] + value
            if next_running not in (0, 1) or column not in (0, 1):
                continue
            row[position] = value
            extend(position + 1, next_running)
        row[position] = 0

    extend(0, 0)
    return tuple(found)


def enumerate_asms(n: int, ceiling: int = DEFAULT_ASM_CEILING) -> Iterator[Asm]:
    """Yield every ``n x n`` ASM once, lexicographically on the flattened entries (-1 < 0 < 1)."""

    if n < 1:
        raise AsmError(f"matrix side must be at least 1, got {n}")
    if n > ceiling:
        raise AsmError(
            format_warning("ASM_CEILING", f"n={n} exceeds {ceiling}; use count_formula({n})={count_formula(n)}")
        )

    target = (1,) * n
    chosen: list[Tuple[int, ...]] = []

    def descend(state: Tuple[int, ...]) -> Iterator[Asm]:
        depth = len(chosen)
        for row, new_state in _row_candidates(state):
            if depth == n - 1 and new_state != target:
                continue
            chosen.append(row)
            if depth == n - 1:
                yield Asm._trusted(tuple(chosen))
            else:
                yield from descend(new_state)
            chosen.pop()

    yield from descend((0,) * n)


@lru_cache(maxsize=None)
def alternating_sign_matrices(n: int) -> Tuple[Asm, ...]:
    """Cached tuple form of :func:`enumerate_asms` (default ceiling)."""

    return tuple(enumerate_asms(n))


@lru_cache(maxsize=None)
def permutation_matrices(n: int) -> Tuple[Asm, ...]:
    """The ``n!`` permutation matrices in lexicographic order of the flattened entries."""

    return tuple(sorted((Asm.from_permutation(p) for p in permutations(range(1, n + 1))), key=_flat_key))


def _flat_key(asm: Asm) -> Tuple[int, ...]:
    return tuple(v for row in asm.rows for v in row)


def permutation_inversions(perm: Sequence[int]) -> int:
    """Classical inversion count of a permutation word."""

    return sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])


def summarize_asms(n: int, ceiling: int = DEFAULT_ASM_CEILING) -> Tuple[dict[str, Any], dict[str, Any]]:
    """Distribution of ``i(X)`` and ``n(X)`` over ``Alt_n`` with the count cross-check."""

    inversions: Counter[int] = Counter()
    negatives: Counter[int] = Counter()
    joint: Counter[Tuple[int, int]] = Counter()
    total = 0
    for asm in enumerate_asms(n, ceiling):
        inversions[asm.inversion_number] += 1
        negatives[asm.negative_count] += 1
        joint[(asm.inversion_number, asm.negative_count)] += 1
        total += 1

    expected = count_formula(n)
    result = {
        "n": n,
        "count": total,
        "count_formula": expected,
        "inversion_distribution": dict(sorted(inversions.items())),
        "negative_distribution": dict(sorted(negatives.items())),
    }
    trace = {
        "joint_distribution": {f"{i},{k}": c for (i, k), c in sorted(joint.items())},
        "count_matches_formula": total == expected,
        "ceiling": ceiling,
    }
    return result, trace


__all__ = [
    "Asm",
    "AsmError",
    "DEFAULT_ASM_CEILING",
    "GenPerm",
    "alternating_sign_matrices",
    "count_formula",
    "enumerate_asms",
    "is_alternating_sign_matrix",
    "permutation_inversions",
    "permutation_matrices",
    "summarize_asms",
]
