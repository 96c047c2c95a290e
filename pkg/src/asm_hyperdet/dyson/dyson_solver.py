"""Coefficient of ``z_1^k ... z_s^k`` in ``F * G``.

``F = prod_{i<j} (z_i/z_j; q)_m (q z_j/z_i; q)_m`` is a Laurent polynomial whose
per-variable exponents lie in ``[-m(s-1), m(s-1)]``.  ``G = prod_i sum_j Q_j z_i^j`` only
has non-negative exponents, so the target coefficient sees ``G`` up to per-variable
degree ``k + m(s-1)`` and no further.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from time import perf_counter
from typing import Any, Tuple

from ..arith.laurent_poly import Exponent, LaurentPoly
from ..arith.q_analogs import qpochhammer
from ..arith.rational_function import RationalFunction
from ..symfun.macdonald import one_row_g
from ..symfun.symmetric import POWER_SUM, SymFun
from ..utils.errors import check_budget
from ..utils.warnings import format_warning

DEFAULT_MAX_S = 4
DEFAULT_MAX_M = 3
DEFAULT_BUDGET_TERMS = 10**7


class DysonSizeError(ValueError):
    """Requested (s, m) above the configured expansion bounds."""

    def __init__(self, s: int, m: int, max_s: int, max_m: int) -> None:
        self.s = s
        self.m = m
        super().__init__(format_warning("DYSON_LIMIT", f"s={s}, m={m} outside s <= {max_s}, m <= {max_m}"))


class SymCoeffPoly(LaurentPoly):
    """Laurent polynomial whose coefficients are symmetric functions."""


def truncation_bound(k: int, s: int, m: int) -> int:
    """Largest per-variable ``G`` degree that can meet ``z^k`` against a term of ``F``."""

    return k + m * (s - 1)


def _check_size(s: int, m: int, max_s: int, max_m: int) -> None:
    if s < 1 or m < 1:
        raise ValueError(f"s and m must be positive, got s={s}, m={m}")
    if s > max_s or m > max_m:
        raise DysonSizeError(s, m, max_s, max_m)


def _f_estimate(s: int, m: int) -> int:
    factors = m * s * (s - 1)
    return factors * (2 * m * (s - 1) + 1) ** max(s - 1, 0)


@lru_cache(maxsize=None)
def expand_F(
    s: int,
    m: int,
    budget: int = DEFAULT_BUDGET_TERMS,
    max_s: int = DEFAULT_MAX_S,
    max_m: int = DEFAULT_MAX_M,
) -> LaurentPoly:
    """Fully expanded ``F`` in ``z_1 .. z_s`` with coefficients in ``QQ(q)``."""

    _check_size(s, m, max_s, max_m)
    check_budget("expand_F", _f_estimate(s, m), budget)
    q = RationalFunction.gen()
    result = LaurentPoly.constant(1, s)
    for i in range(s):
        for j in range(i + 1, s):
            ratio = [0] * s
            ratio[i], ratio[j] = 1, -1
            forward = tuple(ratio)
            backward = tuple(-e for e in ratio)
            for r in range(m):
                result = result * LaurentPoly(s, {(0,) * s: 1, forward: -(q**r)})
                result = result * LaurentPoly(s, {(0,) * s: 1, backward: -(q ** (r + 1))})
    return result


def truncated_G(s: int, m: int, dmax: int) -> SymCoeffPoly:
    """``prod_i sum_{j=0}^{dmax} Q_j z_i^j``."""

    if dmax < 0:
        raise ValueError(f"truncation degree must be non-negative, got {dmax}")
    terms = {}
    for exps in product(range(dmax + 1), repeat=s):
        terms[exps] = _g_coefficient(exps, m)
    return SymCoeffPoly(s, terms)


def _g_coefficient(exps: Exponent, m: int) -> SymFun:
    value = SymFun.one()
    for j in sorted(exps):
        value = value * one_row_g(j, m)
    return value


def dyson_prefactor(s: int, m: int) -> RationalFunction:
    """``(q;q)_{sm} / (q;q)_m^s``."""

    return qpochhammer(1, s * m) / qpochhammer(1, m) ** s


def solve_dyson(
    k: int,
    s: int,
    m: int,
    dmax: int | None = None,
    budget: int = DEFAULT_BUDGET_TERMS,
    max_s: int = DEFAULT_MAX_S,
    max_m: int = DEFAULT_MAX_M,
) -> Tuple[SymFun, dict[str, Any]]:
    """Coefficient of ``z^(k,...,k)`` in ``F * G`` plus an extraction trace.

    ``G`` is looked up lazily per ``F`` term; the product ``F * G`` is never formed.
    """

    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    started = perf_counter()
    bound = truncation_bound(k, s, m) if dmax is None else dmax
    f_poly = expand_F(s, m, budget, max_s, max_m)
    products: dict[Tuple[int, ...], SymFun] = {}
    total: Any = SymFun.zero(k * s)
    used = 0
    for exps, coeff in f_poly.items():
        needed = tuple(k - e for e in exps)
        if any(d < 0 or d > bound for d in needed):
            continue
        key = tuple(sorted(needed))
        if key not in products:
            products[key] = _g_coefficient(key, m)
        g_value = products[key]
        if g_value:
            total = total + g_value * coeff
            used += 1
    if not isinstance(total, SymFun):
        total = SymFun.zero(k * s)
    trace = {
        "k": k,
        "s": s,
        "m": m,
        "truncation": bound,
        "f_terms": len(f_poly),
        "contributing_terms": used,
        "distinct_g_products": len(products),
        "runtime_s": perf_counter() - started,
    }
    return total.to_basis(POWER_SUM), trace


def dyson_coefficient(
    k: int,
    s: int,
    m: int,
    dmax: int | None = None,
    budget: int = DEFAULT_BUDGET_TERMS,
    max_s: int = DEFAULT_MAX_S,
    max_m: int = DEFAULT_MAX_M,
) -> SymFun:
    value, _ = solve_dyson(k, s, m, dmax, budget, max_s, max_m)
    return value


def constant_term(s: int, m: int) -> Any:
    """``CT F``; equals :func:`dyson_prefactor` (the ``k = 0`` extraction)."""

    coeff = expand_F(s, m).coefficient((0,) * s)
    return coeff if isinstance(coeff, RationalFunction) else RationalFunction.constant(Fraction(coeff))


__all__ = [
    "DEFAULT_MAX_M",
    "DEFAULT_MAX_S",
    "DysonSizeError",
    "SymCoeffPoly",
    "constant_term",
    "dyson_coefficient",
    "dyson_prefactor",
    "expand_F",
    "solve_dyson",
    "truncated_G",
    "truncation_bound",
]
