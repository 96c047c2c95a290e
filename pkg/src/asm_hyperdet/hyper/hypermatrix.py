"""Even-dimensional hypermatrices with dense or callback-backed entries."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Any, Callable, Hashable, Iterator, Mapping, Sequence, Tuple

from ..arith.rational_function import DEFAULT_SYMBOL, RationalFunction, to_string
from ..utils.errors import InputFormatError

DEFAULT_DENSE_ENTRY_LIMIT = 10**4

Index = Tuple[int, ...]
EntryFunction = Callable[[Index], Any]
KeyFunction = Callable[[Index], Hashable]


class HypermatrixError(ValueError):
    """Malformed hypermatrix shape, index or entry value."""


def _check_value(index: Index, value: Any) -> Any:
    if value is None or isinstance(value, (bool, str, float)):
        raise HypermatrixError(f"entry at {index} is not an exact ring element: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    return value


@dataclass
class HyperMatrix:
    """``A(i_1, ..., i_dim)`` with 1-based indices in ``[1, n]``.

    ``entry_key`` maps an index to a hashable, sortable key such that equal keys mean
    equal entries; sums group repeated entries through it.  By default the key is the
    index itself.
    """

    n: int
    dim: int
    entries: dict[Index, Any] | None = None
    entry_function: EntryFunction | None = None
    entry_key: KeyFunction | None = None
    _cache: dict[Index, Any] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise HypermatrixError(f"side must be positive, got {self.n}")
        if self.dim < 2 or self.dim % 2:
            raise HypermatrixError(f"dimension must be even and at least 2, got {self.dim}")
        if self.entries is None and self.entry_function is None:
            raise HypermatrixError("hypermatrix needs dense entries or an entry function")
        if self.entries is not None:
            cleaned = {}
            for index, value in self.entries.items():
                key = self._check_index(index)
                value = _check_value(key, value)
                if value:
                    cleaned[key] = value
            self.entries = cleaned

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------
    @classmethod
    def from_function(
        cls,
        n: int,
        dim: int,
        function: EntryFunction,
        key: KeyFunction | None = None,
        dense_limit: int = DEFAULT_DENSE_ENTRY_LIMIT,
    ) -> HyperMatrix:
        """Materialize densely when ``n**dim <= dense_limit``, otherwise keep the callback."""

        matrix = cls(n, dim, entry_function=function, entry_key=key)
        if n**dim <= dense_limit:
            matrix.entries = {index: _check_value(index, function(index)) for index in matrix.indices()}
            matrix.entries = {index: value for index, value in matrix.entries.items() if value}
        return matrix

    @classmethod
    def from_json(cls, payload: Mapping[str, Any], symbol: str = DEFAULT_SYMBOL) -> HyperMatrix:
        try:
            n = int(payload["n"])
            dim = int(payload["dim"])
            items = list(payload.get("entries", []))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputFormatError(f"hypermatrix: expected n, dim and entries: {exc}") from exc
        entries: dict[Index, Any] = {}
        for item in items:
            try:
                index = tuple(int(i) for i in item["index"])
                value = RationalFunction.from_string(str(item["value"]), symbol)
            except (KeyError, TypeError, ValueError) as exc:
                raise InputFormatError(f"hypermatrix: bad entry {item!r}: {exc}") from exc
            entries[index] = value.constant_value() if value.is_constant() else value
        try:
            return cls(n, dim, entries=entries)
        except HypermatrixError as exc:
            raise InputFormatError(f"hypermatrix: {exc}") from exc

    def to_json(self) -> dict[str, Any]:
        items = []
        for index in self.indices():
            value = self[index]
            if value:
                items.append({"index": list(index), "value": to_string(value)})
        return {"n": self.n, "dim": self.dim, "entries": items}

    # ------------------------------------------------------------------
    # Access
    # ------------------------------------------------------------------
    def _check_index(self, index: Sequence[int]) -> Index:
        key = tuple(int(i) for i in index)
        if len(key) != self.dim or any(not 1 <= i <= self.n for i in key):
            raise HypermatrixError(f"index {key} outside [1, {self.n}]^{self.dim}")
        return key

    def indices(self) -> Iterator[Index]:
        return product(range(1, self.n + 1), repeat=self.dim)

    def __getitem__(self, index: Sequence[int]) -> Any:
        key = self._check_index(index)
        if self.entries is not None:
            return self.entries.get(key, Fraction(0))
        if key not in self._cache:
            self._cache[key] = _check_value(key, self.entry_function(key))  # type: ignore[misc]
        return self._cache[key]

    def key(self, index: Index) -> Hashable:
        return self.entry_key(index) if self.entry_key is not None else index

    @property
    def m(self) -> int:
        return self.dim // 2

    @property
    def is_dense(self) -> bool:
        return self.entries is not None

    def check_consistency(self) -> bool:
        """Dense and function backings agree wherever both exist."""

        if self.entries is None or self.entry_function is None:
            return True
        return all(self[index] == _check_value(index, self.entry_function(index)) for index in self.indices())


def random_hypermatrix(
    n: int,
    dim: int,
    rng: random.Random,
    numerators: Tuple[int, int] = (-5, 5),
    denominators: Tuple[int, int] = (1, 4),
) -> HyperMatrix:
    """Dense hypermatrix of random small rationals."""

    entries = {
        index: Fraction(rng.randint(*numerators), rng.randint(*denominators))
        for index in product(range(1, n + 1), repeat=dim)
    }
    return HyperMatrix(n, dim, entries=entries)


def matrix_as_hypermatrix(rows: Sequence[Sequence[Any]]) -> HyperMatrix:
    """A square matrix viewed as a 2-dimensional hypermatrix."""

    n = len(rows)
    return HyperMatrix(n, 2, entries={(i + 1, j + 1): rows[i][j] for i in range(n) for j in range(n)})


def contract_slot(b: Sequence[Sequence[Any]], a: HyperMatrix, slot: int) -> HyperMatrix:
    """``(B o_k A)(..., i_k, ...) = sum_j B[i_k, j] A(..., j, ...)`` for the 1-based slot ``k``."""

    if not 1 <= slot <= a.dim:
        raise HypermatrixError(f"slot {slot} outside 1..{a.dim}")
    if len(b) != a.n or any(len(row) != a.n for row in b):
        raise HypermatrixError(f"contraction matrix must be {a.n} x {a.n}")
    k = slot - 1
    entries: dict[Index, Any] = {}
    for index in a.indices():
        total: Any = Fraction(0)
        for j in range(1, a.n + 1):
            coeff = b[index[k] - 1][j - 1]
            if coeff:
                total = total + coeff * a[index[:k] + (j,) + index[k + 1 :]]
        entries[index] = total
    return HyperMatrix(a.n, a.dim, entries=entries)


__all__ = [
    "DEFAULT_DENSE_ENTRY_LIMIT",
    "EntryFunction",
    "HyperMatrix",
    "HypermatrixError",
    "Index",
    "KeyFunction",
    "contract_slot",
    "matrix_as_hypermatrix",
    "random_hypermatrix",
]
