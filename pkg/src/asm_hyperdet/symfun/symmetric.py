"""Homogeneous symmetric functions in the power-sum and monomial bases.

Coefficients live in ``QQ(q)`` (:class:`RationalFunction`) or ``QQ`` (``Fraction``).
The parameter ``t`` of the Macdonald inner product is always ``q^m``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterable, Mapping, Tuple

from sympy import Matrix, Rational

from ..arith.rational_function import DEFAULT_SYMBOL, RationalFunction, to_string
from ..detlib.determinants import det_classical
from ..utils.errors import InputFormatError
from .partitions import Partition, partitions_of

POWER_SUM = "p"
MONOMIAL = "m"
BASES = (POWER_SUM, MONOMIAL)

Coefficient = Any


def _is_scalar(value: Any) -> bool:
    return isinstance(value, (int, Fraction, RationalFunction)) and not isinstance(value, bool)


def _clean(value: Any) -> Any:
    return Fraction(value) if isinstance(value, int) else value


class SymFun:
    """Immutable homogeneous symmetric function ``sum_mu c_mu b_mu`` in basis ``b``."""

    __slots__ = ("degree", "basis", "_coeffs")

    is_symmetric_function = True

    def __init__(self, degree: int, coeffs: Mapping[Partition, Coefficient] | None = None, basis: str = POWER_SUM) -> None:
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")
        if degree < 0:
            raise ValueError(f"degree must be non-negative, got {degree}")
        cleaned: dict[Partition, Coefficient] = {}
        for partition, coeff in (coeffs or {}).items():
            if not isinstance(partition, Partition):
                partition = Partition(tuple(partition))
            if partition.weight != degree:
                raise ValueError(f"{partition} has weight {partition.weight}, expected {degree}")
            value = _clean(coeff)
            if value:
                cleaned[partition] = value
        self.degree = degree
        self.basis = basis
        self._coeffs = cleaned

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------
    @classmethod
    def _raw(cls, degree: int, coeffs: dict[Partition, Coefficient], basis: str) -> SymFun:
        value = cls.__new__(cls)
        value.degree = degree
        value.basis = basis
        value._coeffs = coeffs
        return value

    @classmethod
    def constant(cls, value: Coefficient) -> SymFun:
        return cls(0, {Partition(()): value})

    @classmethod
    def one(cls) -> SymFun:
        return cls.constant(1)

    @classmethod
    def zero(cls, degree: int = 0, basis: str = POWER_SUM) -> SymFun:
        return cls(degree, {}, basis)

    @classmethod
    def power_sum(cls, partition: Partition | Iterable[int], coeff: Coefficient = 1) -> SymFun:
        shape = partition if isinstance(partition, Partition) else Partition.of(partition)
        return cls(shape.weight, {shape: coeff}, POWER_SUM)

    @classmethod
    def monomial(cls, partition: Partition | Iterable[int], coeff: Coefficient = 1) -> SymFun:
        shape = partition if isinstance(partition, Partition) else Partition.of(partition)
        return cls(shape.weight, {shape: coeff}, MONOMIAL)

    # ------------------------------------------------------------------
    # Introspection
    # ------------------------------------------------------------------
    @property
    def coefficients(self) -> dict[Partition, Coefficient]:
        return dict(self._coeffs)

    def coefficient(self, partition: Partition) -> Coefficient:
        return self._coeffs.get(partition, Fraction(0))

    def support(self) -> list[Partition]:
        return sorted(self._coeffs, reverse=True)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    # ------------------------------------------------------------------
    # Basis change
    # ------------------------------------------------------------------
    def to_basis(self, basis: str) -> SymFun:
        if basis == self.basis:
            return self
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        if basis == MONOMIAL:
            matrix = power_to_monomial(self.degree)
        else:
            matrix = monomial_to_power(self.degree)
        result: dict[Partition, Coefficient] = {}
        for source, coeff in self._coeffs.items():
            for target, weight in matrix[source].items():
                term = coeff * weight
                result[target] = result[target] + term if target in result else term
        return SymFun(self.degree, result, basis)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------
    def _match(self, other: SymFun) -> Tuple[SymFun, SymFun]:
        if other.basis != self.basis:
            return self.to_basis(POWER_SUM), other.to_basis(POWER_SUM)
        return self, other

    def _lift(self, other: Any) -> SymFun | None:
        if isinstance(other, SymFun):
            return other
        if _is_scalar(other):
            return SymFun.constant(other) if other else SymFun.zero(self.degree, self.basis)
        return None

    def __add__(self, other: Any) -> SymFun:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        if not rhs:
            return self
        if not self:
            return rhs
        if rhs.degree != self.degree:
            raise ValueError(f"cannot add symmetric functions of degree {self.degree} and {rhs.degree}")
        lhs, rhs = self._match(rhs)
        result = dict(lhs._coeffs)
        for partition, coeff in rhs._coeffs.items():
            if partition in result:
                total = result[partition] + coeff
                if total:
                    result[partition] = total
                else:
                    del result[partition]
            else:
                result[partition] = coeff
        return SymFun._raw(self.degree, result, lhs.basis)

    __radd__ = __add__

    def __neg__(self) -> SymFun:
        return SymFun._raw(self.degree, {k: -v for k, v in self._coeffs.items()}, self.basis)

    def __sub__(self, other: Any) -> SymFun:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Any) -> SymFun:
        lhs = self._lift(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def scale(self, scalar: Coefficient) -> SymFun:
        if not scalar:
            return SymFun.zero(self.degree, self.basis)
        return SymFun._raw(self.degree, {k: v * scalar for k, v in self._coeffs.items()}, self.basis)

    def __mul__(self, other: Any) -> SymFun:
        if _is_scalar(other):
            return self.scale(other)
        if isinstance(other, SymFun):
            return multiply(self, other)
        return NotImplemented

    def __rmul__(self, other: Any) -> SymFun:
        if _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other: Any) -> SymFun:
        if not _is_scalar(other):
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division of a symmetric function by zero")
        return self.scale(1 / _clean(other))

    def __pow__(self, exponent: int) -> SymFun:
        if exponent < 0:
            raise ValueError("symmetric functions have no negative powers")
        result = SymFun.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        if not self or not rhs:
            return not self and not rhs
        if rhs.degree != self.degree:
            return False
        lhs, rhs = self._match(rhs)
        if len(lhs._coeffs) != len(rhs._coeffs):
            return False
        return all(k in rhs._coeffs and rhs._coeffs[k] == v for k, v in lhs._coeffs.items())

    __hash__ = None  # type: ignore[assignment]

    # ------------------------------------------------------------------
    # Evaluation and serialization
    # ------------------------------------------------------------------
    def map_coefficients(self, func: Any) -> SymFun:
        return SymFun(self.degree, {k: func(v) for k, v in self._coeffs.items()}, self.basis)

    def specialize(self, point: Fraction | int) -> SymFun:
        """Evaluate every coefficient at ``q = point``."""

        def evaluate(value: Coefficient) -> Fraction:
            if isinstance(value, RationalFunction):
                return value.specialize(point)
            return Fraction(value)

        return self.map_coefficients(evaluate)

    def to_json(self) -> dict[str, Any]:
        return {
            "degree": self.degree,
            "basis": self.basis,
            "coefficients": {partition.key(): to_string(self._coeffs[partition]) for partition in self.support()},
        }

    @classmethod
    def from_json(cls, payload: Mapping[str, Any], symbol: str = DEFAULT_SYMBOL) -> SymFun:
        try:
            degree = int(payload["degree"])
            basis = str(payload.get("basis", POWER_SUM))
            coeffs = {
                Partition.from_key(key): parse_coefficient(str(text), symbol)
                for key, text in dict(payload.get("coefficients", {})).items()
            }
            return cls(degree, coeffs, basis)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputFormatError(f"symmetric function: {exc}") from exc

    def to_string(self) -> str:
        if not self._coeffs:
            return "0"
        pieces = []
        for partition in self.support():
            coeff = self._coeffs[partition]
            text = to_string(coeff)
            if isinstance(coeff, RationalFunction) and not coeff.is_constant():
                text = f"({text})"
            label = f"{self.basis}{partition}" if partition.parts else ""
            if not label:
                pieces.append(text)
            elif text == "1":
                pieces.append(label)
            elif text == "-1":
                pieces.append(f"-{label}")
            else:
                pieces.append(f"{text}*{label}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"SymFun({self.degree}, {self.to_string()!r})"


def parse_coefficient(text: str, symbol: str) -> Coefficient:
    value = RationalFunction.from_string(text, symbol)
    return value.constant_value() if value.is_constant() else value


# ----------------------------------------------------------------------
# Transition matrices
# ----------------------------------------------------------------------
def _assignment_count(parts: Tuple[int, ...], capacities: Tuple[int, ...]) -> int:
    """Ways to send each part to a slot so every slot is filled exactly."""

    @lru_cache(maxsize=None)
    def count(position: int, remaining: Tuple[int, ...]) -> int:
        if position == len(parts):
            return 1 if not any(remaining) else 0
        total = 0
        for slot, room in enumerate(remaining):
            if room >= parts[position]:
                total += count(position + 1, remaining[:slot] + (room - parts[position],) + remaining[slot + 1 :])
        return total

    return count(0, capacities)


@lru_cache(maxsize=None)
def power_to_monomial(degree: int) -> dict[Partition, dict[Partition, Fraction]]:
    """``p_lambda = sum_mu L[lambda][mu] m_mu`` with integer ``L``."""

    shapes = partitions_of(degree)
    table: dict[Partition, dict[Partition, Fraction]] = {}
    for source in shapes:
        row = {}
        for target in shapes:
            value = _assignment_count(source.parts, target.parts)
            if value:
                row[target] = Fraction(value)
        table[source] = row
    return table


@lru_cache(maxsize=None)
def monomial_to_power(degree: int) -> dict[Partition, dict[Partition, Fraction]]:
    """``m_mu = sum_lambda L^{-1}[mu][lambda] p_lambda``."""

    shapes = partitions_of(degree)
    forward = power_to_monomial(degree)
    size = len(shapes)
    matrix = Matrix(size, size, lambda i, j: Rational(int(forward[shapes[i]].get(shapes[j], 0))))
    inverse = matrix.inv()
    table: dict[Partition, dict[Partition, Fraction]] = {}
    for j, target in enumerate(shapes):
        row = {}
        for i, source in enumerate(shapes):
            entry = inverse[j, i]
            if entry != 0:
                row[source] = Fraction(int(entry.p), int(entry.q))
        table[target] = row
    return table


def basis_convert(value: SymFun, basis: str) -> SymFun:
    return value.to_basis(basis)


def multiply(f: SymFun, g: SymFun) -> SymFun:
    """Product in the power-sum basis: ``p_lambda p_mu = p_{lambda u mu}``."""

    if not f or not g:
        return SymFun.zero(f.degree + g.degree)
    lhs = f.to_basis(POWER_SUM)
    rhs = g.to_basis(POWER_SUM)
    result: dict[Partition, Coefficient] = {}
    for a, ca in lhs._coeffs.items():
        for b, cb in rhs._coeffs.items():
            key = a.union(b)
            term = ca * cb
            result[key] = result[key] + term if key in result else term
    return SymFun(f.degree + g.degree, result, POWER_SUM)


# ----------------------------------------------------------------------
# Inner product and classical families
# ----------------------------------------------------------------------
@lru_cache(maxsize=None)
def power_sum_norm(partition: Partition, m: int, symbol: str = DEFAULT_SYMBOL) -> RationalFunction:
    """``<p_lambda, p_lambda>_{q, q^m} = z_lambda prod_i (1 - q^{lambda_i}) / (1 - q^{m lambda_i})``."""

    q = RationalFunction.gen(symbol)
    value = RationalFunction.constant(partition.z, symbol)
    for part in partition.parts:
        value = value * (1 - q**part) / (1 - q ** (m * part))
    return value


def scalar_product_qt(f: SymFun, g: SymFun, m: int) -> Coefficient:
    """Macdonald inner product with ``t = q^m``, bilinear from the power-sum diagonal."""

    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    if f and g and f.degree != g.degree:
        raise ValueError(f"scalar product of degree {f.degree} and degree {g.degree} elements")
    lhs = f.to_basis(POWER_SUM)
    rhs = g.to_basis(POWER_SUM)
    total: Coefficient = Fraction(0)
    for partition, coeff in lhs._coeffs.items():
        other = rhs._coeffs.get(partition)
        if other:
            total = total + coeff * other * power_sum_norm(partition, m)
    return total


@lru_cache(maxsize=None)
def complete_homogeneous(k: int) -> SymFun:
    """``h_k = sum_{lambda |- k} p_lambda / z_lambda``; ``h_0 = 1``."""

    if k < 0:
        raise ValueError(f"h_k needs k >= 0, got {k}")
    return SymFun(k, {shape: Fraction(1, shape.z) for shape in partitions_of(k)}, POWER_SUM)


@lru_cache(maxsize=None)
def elementary(k: int) -> SymFun:
    """``e_k = sum_{lambda |- k} (-1)^{k - l(lambda)} p_lambda / z_lambda``."""

    if k < 0:
        raise ValueError(f"e_k needs k >= 0, got {k}")
    return SymFun(
        k,
        {shape: Fraction((-1) ** (k - len(shape)), shape.z) for shape in partitions_of(k)},
        POWER_SUM,
    )


@lru_cache(maxsize=None)
def schur_jacobi_trudi(partition: Partition) -> SymFun:
    """``s_lambda = det(h_{lambda_i - i + j})`` with ``h_0 = 1`` and ``h_{<0} = 0``."""

    size = len(partition)
    if size == 0:
        return SymFun.one()
    rows: list[list[Any]] = []
    for i in range(size):
        row: list[Any] = []
        for j in range(size):
            index = partition.parts[i] - i + j
            row.append(complete_homogeneous(index) if index >= 0 else Fraction(0))
        rows.append(row)
    value = det_classical(rows, method="cofactor")
    if not isinstance(value, SymFun):
        value = SymFun.constant(value) if value else SymFun.zero(partition.weight)
    return value.to_basis(POWER_SUM)


__all__ = [
    "BASES",
    "MONOMIAL",
    "POWER_SUM",
    "SymFun",
    "basis_convert",
    "complete_homogeneous",
    "elementary",
    "monomial_to_power",
    "multiply",
    "parse_coefficient",
    "power_sum_norm",
    "power_to_monomial",
    "scalar_product_qt",
    "schur_jacobi_trudi",
]
