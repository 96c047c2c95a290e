"""Macdonald P and Q functions at ``t = q^m`` built by Gram-Schmidt, plus one-row functions."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Any

from ..arith.rational_function import PoleError, RationalFunction
from ..utils.warnings import format_warning
from .cache import MacdonaldCache
from .partitions import Partition, partitions_of
from .symmetric import POWER_SUM, SymFun, scalar_product_qt

DEFAULT_DEGREE_CEILING = 8

_LEVELS: dict[tuple[int, int], dict[Partition, SymFun]] = {}
_ENTRIES: dict[tuple[str, Partition, int], SymFun] = {}


class DegreeCeilingError(ValueError):
    """Partition weight above the configured symmetric-function degree ceiling."""

    def __init__(self, weight: int, ceiling: int) -> None:
        self.weight = weight
        self.ceiling = ceiling
        super().__init__(format_warning("DEGREE_CEILING", f"weight {weight} > ceiling {ceiling}"))


def _check_m(m: int) -> None:
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")


def _gram_schmidt(degree: int, m: int) -> dict[Partition, SymFun]:
    # increasing lexicographic order refines dominance, so each m_lambda is
    # orthogonalised against everything it can dominate
    shapes = partitions_of(degree)
    built: dict[Partition, SymFun] = {}
    norms: dict[Partition, Any] = {}
    for shape in shapes:
        leading = SymFun.monomial(shape).to_basis(POWER_SUM)
        vector = leading
        for lower, lower_vector in built.items():
            overlap = scalar_product_qt(leading, lower_vector, m)
            if overlap:
                vector = vector - lower_vector * (overlap / norms[lower])
        built[shape] = vector
        norms[shape] = scalar_product_qt(vector, vector, m)
    return built


def macdonald_level(degree: int, m: int, ceiling: int = DEFAULT_DEGREE_CEILING) -> dict[Partition, SymFun]:
    """Every ``P_lambda`` with ``|lambda| = degree`` in the power-sum basis (memoized)."""

    _check_m(m)
    if degree > ceiling:
        raise DegreeCeilingError(degree, ceiling)
    key = (degree, m)
    if key not in _LEVELS:
        _LEVELS[key] = _gram_schmidt(degree, m)
    return _LEVELS[key]


def clear_memory_cache() -> None:
    _LEVELS.clear()
    _ENTRIES.clear()
    one_row_g.cache_clear()


def macdonald_P(
    partition: Partition,
    m: int,
    cache: MacdonaldCache | None = None,
    ceiling: int = DEFAULT_DEGREE_CEILING,
    basis: str = POWER_SUM,
) -> SymFun:
    """``P_lambda(q, q^m) = m_lambda + sum_{mu < lambda} c_{lambda mu} m_mu``.

    With a disk cache, a stored entry is used as is and a freshly built one is written
    back under its partition key.
    """

    _check_m(m)
    if partition.weight > ceiling:
        raise DegreeCeilingError(partition.weight, ceiling)
    marker = (str(cache.directory) if cache is not None else "", partition, m)
    value = _ENTRIES.get(marker)
    if value is None:
        if cache is not None:
            stored = cache.load(m, POWER_SUM)
            if partition in stored:
                value = stored[partition]
            else:
                value = macdonald_level(partition.weight, m, ceiling)[partition]
                cache.store(m, POWER_SUM, {partition: value})
        else:
            value = macdonald_level(partition.weight, m, ceiling)[partition]
        _ENTRIES[marker] = value
    return value.to_basis(basis)


@lru_cache(maxsize=None)
def b_lambda(partition: Partition, m: int) -> RationalFunction:
    """``prod_s (1 - q^{a(s)} t^{l(s)+1}) / (1 - q^{a(s)+1} t^{l(s)})`` at ``t = q^m``."""

    _check_m(m)
    q = RationalFunction.gen()
    value = RationalFunction.constant(1)
    for cell in partition.cells():
        arm, leg = partition.arm(cell), partition.leg(cell)
        value = value * (1 - q ** (arm + m * (leg + 1))) / (1 - q ** (arm + 1 + m * leg))
    return value


def macdonald_Q(
    partition: Partition,
    m: int,
    cache: MacdonaldCache | None = None,
    ceiling: int = DEFAULT_DEGREE_CEILING,
    basis: str = POWER_SUM,
) -> SymFun:
    """``Q_lambda = b_lambda P_lambda``."""

    return macdonald_P(partition, m, cache, ceiling, basis) * b_lambda(partition, m)


@lru_cache(maxsize=None)
def one_row_g(j: int, m: int) -> SymFun:
    """``Q_(j)(q, q^m)`` from the closed form; ``0`` for ``j < 0`` and ``1`` for ``j = 0``."""

    _check_m(m)
    if j < 0:
        return SymFun.zero(0)
    if j == 0:
        return SymFun.one()
    q = RationalFunction.gen()
    coeffs: dict[Partition, Any] = {}
    for shape in partitions_of(j):
        value = RationalFunction.constant(Fraction(1, shape.z))
        for part in shape.parts:
            value = value * (1 - q ** (m * part)) / (1 - q**part)
        coeffs[shape] = value
    return SymFun(j, coeffs, POWER_SUM)


def pole_free_at(value: SymFun, point: int | Fraction = 1) -> bool:
    """True when every coefficient evaluates finitely at ``q = point``."""

    try:
        value.specialize(point)
    except PoleError:
        return False
    return True


__all__ = [
    "DEFAULT_DEGREE_CEILING",
    "DegreeCeilingError",
    "b_lambda",
    "clear_memory_cache",
    "macdonald_P",
    "macdonald_Q",
    "macdonald_level",
    "one_row_g",
    "pole_free_at",
]
