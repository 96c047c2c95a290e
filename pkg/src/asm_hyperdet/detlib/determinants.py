"""Determinants over the exact coefficient rings of the toolkit.

Entries may be ``Fraction`` values, :class:`RationalFunction` values or
:class:`LaurentPoly` values (generic symbolic matrices).  The lambda-determinant sums over
alternating sign matrices; every other routine is classical.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Any, Mapping, Sequence, Tuple

from ..arith.laurent_poly import LaurentPoly, parse_laurent
from ..arith.rational_function import DEFAULT_SYMBOL, RationalFunction, to_string
from ..asm.alternating_sign import Asm, alternating_sign_matrices
from ..utils.errors import InputFormatError
from ..utils.warnings import format_warning

DEFAULT_DET_LAMBDA_MAX_SIDE = 6
DEFAULT_PFAFFIAN_MAX_SIDE = 8
COFACTOR_MAX_SIDE = 4

SquareMatrix = Sequence[Sequence[Any]]


class DeterminantError(ZeroDivisionError):
    """A contributing ASM term needs the inverse of a zero entry."""

    def __init__(self, asm: Asm, position: Tuple[int, int]) -> None:
        self.asm = asm
        self.position = position
        rows = [list(r) for r in asm.rows]
        super().__init__(format_warning("ZERO_ENTRY", f"entry {position} inverted by ASM {rows}"))


def _normalize(value: Any) -> Any:
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    return value


def as_square(matrix: SquareMatrix) -> list[list[Any]]:
    """Copy *matrix* into a list of rows, normalizing ``int`` entries to ``Fraction``."""

    rows = [[_normalize(v) for v in row] for row in matrix]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError(f"matrix is not square: row lengths {[len(r) for r in rows]} for {n} rows")
    return rows


def _is_field_valued(rows: list[list[Any]]) -> bool:
    return all(isinstance(v, (Fraction, RationalFunction)) for row in rows for v in row)


def _cofactor(rows: list[list[Any]], columns: Tuple[int, ...], start: int) -> Any:
    if start == len(rows):
        return Fraction(1)
    total: Any = Fraction(0)
    for position, column in enumerate(columns):
        entry = rows[start][column]
        if not entry:
            continue
        minor = _cofactor(rows, columns[:position] + columns[position + 1 :], start + 1)
        term = entry * minor
        total = total + term if position % 2 == 0 else total - term
    return total


def _bareiss(rows: list[list[Any]]) -> Any:
    work = [list(row) for row in rows]
    n = len(work)
    sign = 1
    previous: Any = Fraction(1)
    for k in range(n - 1):
        if not work[k][k]:
            pivot = next((r for r in range(k + 1, n) if work[r][k]), None)
            if pivot is None:
                return Fraction(0)
            work[k], work[pivot] = work[pivot], work[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = (work[i][j] * work[k][k] - work[i][k] * work[k][j]) / previous
        previous = work[k][k]
    return work[n - 1][n - 1] if sign > 0 else -work[n - 1][n - 1]


def det_classical(matrix: SquareMatrix, method: str = "auto") -> Any:
    """Exact determinant: cofactor expansion up to side 4, fraction-free elimination above.

    ``method`` forces ``"cofactor"`` or ``"bareiss"``; elimination needs field-valued
    entries, so matrices of Laurent polynomials always expand by cofactors.
    """

    rows = as_square(matrix)
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if method not in {"auto", "cofactor", "bareiss"}:
        raise ValueError(f"unknown determinant method {method!r}")
    use_bareiss = method == "bareiss" or (method == "auto" and n > COFACTOR_MAX_SIDE and _is_field_valued(rows))
    if use_bareiss:
        if not _is_field_valued(rows):
            raise ValueError("fraction-free elimination needs Fraction or RationalFunction entries")
        return _bareiss(rows)
    return _cofactor(rows, tuple(range(n)), 0)


def sign_factor(asm: Asm, lam: Any) -> Any:
    """``(-lam)^{i(X)} (1 - lam^{-1})^{n(X)}`` written as ``(-1)^i lam^{i-n} (lam-1)^n``."""

    inversions = asm.inversion_number
    negatives = asm.negative_count
    if negatives == 0:
        return (-lam) ** inversions
    return (-1) ** inversions * lam ** (inversions - negatives) * (lam - 1) ** negatives


def monomial_quotient(rows: list[list[Any]], asm: Asm) -> Any:
    """``A^X = prod a_ij^{x_ij}``; raises :class:`DeterminantError` on a zero inverted entry."""

    for i, j, v in asm.nonzero:
        if v < 0 and not rows[i][j]:
            raise DeterminantError(asm, (i + 1, j + 1))
    product: Any = Fraction(1)
    for i, j, v in asm.nonzero:
        if v > 0:
            entry = rows[i][j]
            if not entry:
                return Fraction(0)
            product = product * entry
    for i, j, v in asm.nonzero:
        if v < 0:
            product = product / rows[i][j]
    return product


def det_lambda(matrix: SquareMatrix, lam: Any, max_side: int = DEFAULT_DET_LAMBDA_MAX_SIDE) -> Any:
    """Sum over ``Alt_n`` of ``sign_factor(X, lam) * A^X``.

    Terms with an exactly vanishing sign factor are skipped before ``A^X`` is formed, so
    ``lam = 1`` is safe on matrices with zero entries.
    """

    rows = as_square(matrix)
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n > max_side:
        raise ValueError(f"lambda-determinant limited to side {max_side}, got {n}")
    lam = _normalize(lam)
    total: Any = Fraction(0)
    for asm in alternating_sign_matrices(n):
        weight = sign_factor(asm, lam)
        if not weight:
            continue
        total = total + weight * monomial_quotient(rows, asm)
    return total


def lambda_vandermonde(xs: Sequence[Any], lam: Any) -> Any:
    """``prod_{i<j} (x_j - lam x_i)``."""

    values = [_normalize(x) for x in xs]
    lam = _normalize(lam)
    product: Any = Fraction(1)
    for j in range(len(values)):
        for i in range(j):
            product = product * (values[j] - lam * values[i])
    return product


def vandermonde_matrix(xs: Sequence[Any]) -> list[list[Any]]:
    """``(x_i^{j-1})`` for 1-based ``i, j``."""

    values = [_normalize(x) for x in xs]
    return [[x**j for j in range(len(values))] for x in values]


def generic_matrix(n: int, prefix: str = "a") -> list[list[LaurentPoly]]:
    """Symbolic ``n x n`` matrix with independent variables ``a11 .. ann``."""

    names = [f"{prefix}{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    gens = LaurentPoly.generators(len(names), names)
    return [[gens[i * n + j] for j in range(n)] for i in range(n)]


def _is_antisymmetric(rows: list[list[Any]]) -> bool:
    n = len(rows)
    return all(rows[i][j] == -rows[j][i] for i in range(n) for j in range(i, n))


def pfaffian(matrix: SquareMatrix, max_side: int = DEFAULT_PFAFFIAN_MAX_SIDE) -> Any:
    """Signed sum over perfect matchings of an antisymmetric matrix of even side."""

    rows = as_square(matrix)
    n = len(rows)
    if n % 2:
        raise ValueError(f"Pfaffian needs an even side, got {n}")
    if n > max_side:
        raise ValueError(f"Pfaffian limited to side {max_side}, got {n}")
    if not _is_antisymmetric(rows):
        raise ValueError("Pfaffian needs an antisymmetric matrix")

    @lru_cache(maxsize=None)
    def expand(remaining: Tuple[int, ...]) -> Any:
        if not remaining:
            return Fraction(1)
        first, rest = remaining[0], remaining[1:]
        total: Any = Fraction(0)
        for position, partner in enumerate(rest):
            entry = rows[first][partner]
            if not entry:
                continue
            term = entry * expand(rest[:position] + rest[position + 1 :])
            total = total + term if position % 2 == 0 else total - term
        return total

    return expand(tuple(range(n)))


def schur_pfaffian_matrix(xs: Sequence[Any]) -> list[list[Any]]:
    """``M_ij = (x_j - x_i)/(x_j + x_i)``."""

    values = [_normalize(x) for x in xs]
    return [[(xj - xi) / (xj + xi) for xj in values] for xi in values]


# ----------------------------------------------------------------------
# JSON input
# ----------------------------------------------------------------------
def matrix_from_json(payload: Mapping[str, Any], symbol: str = DEFAULT_SYMBOL) -> Tuple[list[list[Any]], list[str]]:
    """Read ``{"n": 3, "entries": [["a11", ...], ...]}``.

    Entries are rational-function strings in *symbol* or expressions in free variables
    (``x1``, ``a12``...).  Free variables turn the whole matrix into Laurent polynomials;
    the returned name list is empty otherwise.
    """

    try:
        raw = [[str(v) for v in row] for row in payload["entries"]]
        n = int(payload.get("n", len(raw)))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputFormatError(f"matrix: expected {{'n': int, 'entries': [[...]]}}: {exc}") from exc
    if n != len(raw) or any(len(row) != n for row in raw):
        raise InputFormatError(f"matrix: declared n={n} does not match the entry grid")

    names = _free_variables(raw, symbol)
    try:
        if names:
            rows = [[parse_laurent(text, names, symbol) for text in row] for row in raw]
        else:
            rows = [[RationalFunction.from_string(text, symbol) for text in row] for row in raw]
    except ValueError as exc:
        raise InputFormatError(f"matrix: {exc}") from exc
    return rows, names


def matrix_to_json(matrix: SquareMatrix) -> dict[str, Any]:
    """Inverse of :func:`matrix_from_json`: entries in canonical text."""

    rows = as_square(matrix)

    def text(value: Any) -> str:
        if isinstance(value, LaurentPoly):
            return value.to_string()
        return to_string(value)

    return {"n": len(rows), "entries": [[text(value) for value in row] for row in rows]}


def _free_variables(raw: list[list[str]], symbol: str) -> list[str]:
    seen: dict[str, None] = {}
    for row in raw:
        for text in row:
            for token in re.findall(r"[A-Za-z_][A-Za-z_0-9]*", text):
                if token != symbol:
                    seen.setdefault(token, None)
    return list(seen)


__all__ = [
    "DEFAULT_DET_LAMBDA_MAX_SIDE",
    "DEFAULT_PFAFFIAN_MAX_SIDE",
    "DeterminantError",
    "SquareMatrix",
    "as_square",
    "det_classical",
    "det_lambda",
    "generic_matrix",
    "lambda_vandermonde",
    "matrix_from_json",
    "matrix_to_json",
    "monomial_quotient",
    "pfaffian",
    "schur_pfaffian_matrix",
    "sign_factor",
    "vandermonde_matrix",
]
