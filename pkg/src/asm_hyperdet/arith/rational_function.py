"""Reduced univariate rational functions with exact rational coefficients.

The kernel is sympy's sparse fraction field ``QQ(q)``: every operation cancels the
polynomial gcd, so a value is always stored as ``numer/denom`` with integer
coefficients, ``gcd(numer, denom) = 1`` in ``Z[q]`` and a positive leading coefficient on
the denominator.  That form is unique, which makes equality a structural comparison.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Any, Union

from sympy import Symbol
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, FracField, field
from sympy.polys.polyerrors import CoercionFailed
from sympy.polys.rings import PolyElement

from ..utils.warnings import format_warning

DEFAULT_SYMBOL = "q"
LAMBDA_SYMBOL = "lam"

BigRational = Fraction
QPoly = PolyElement
Scalar = Union[int, Fraction]

_PARSE_TRANSFORMATIONS = standard_transformations + (convert_xor,)


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a zero of its reduced denominator."""

    def __init__(self, point: Fraction, expression: str) -> None:
        self.point = point
        self.expression = expression
        super().__init__(format_warning("POLE_AT_POINT", f"{expression} at {point}"))


@lru_cache(maxsize=None)
def coefficient_field(symbol: str = DEFAULT_SYMBOL) -> FracField:
    """Return the fraction field ``QQ(symbol)``."""

    fraction_field, _ = field(symbol, QQ)
    return fraction_field


def to_qq(value: Scalar) -> Any:
    """Convert an ``int`` or ``Fraction`` into sympy's ``QQ`` ground type."""

    frac = Fraction(value)
    return QQ(frac.numerator, frac.denominator)


def from_qq(value: Any) -> Fraction:
    """Convert a ``QQ`` ground element back into a ``Fraction``."""

    return Fraction(int(value.numerator), int(value.denominator))


def _normalize(element: FracElement) -> FracElement:
    """Scale ``numer/denom`` to integer coefficients of content 1 over a positive leading term.

    sympy cancels the gcd but leaves the scalar factor free: ``from_expr`` and negative
    powers can hand back ``1/(-q + 1)`` or ``(1/2)/(q/2)``.
    """

    numer, denom = element.numer, element.denom
    if not numer:
        return element.field.zero
    coeffs = [from_qq(c) for c in numer.coeffs()] + [from_qq(c) for c in denom.coeffs()]
    common = lcm(*(c.denominator for c in coeffs))
    content = gcd(*(int(c * common) for c in coeffs))
    scale = Fraction(common, content)
    if from_qq(denom.LC) < 0:
        scale = -scale
    if scale == 1:
        return element
    factor = to_qq(scale)
    return element.raw_new(numer.mul_ground(factor), denom.mul_ground(factor))


class RationalFunction:
    """Immutable element of ``QQ(x)`` for a single named indeterminate."""

    __slots__ = ("_element",)

    def __init__(self, element: FracElement) -> None:
        self._element = _normalize(element)

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------
    @classmethod
    def gen(cls, symbol: str = DEFAULT_SYMBOL) -> RationalFunction:
        """Return the indeterminate itself."""

        return cls(coefficient_field(symbol).gens[0])

    @classmethod
    def constant(cls, value: Scalar, symbol: str = DEFAULT_SYMBOL) -> RationalFunction:
        return cls(coefficient_field(symbol).ground_new(to_qq(value)))

    @classmethod
    def from_string(cls, text: str, symbol: str = DEFAULT_SYMBOL) -> RationalFunction:
        """Parse the canonical string form (``^`` or ``**`` for powers)."""

        try:
            expr = parse_expr(
                text,
                local_dict={symbol: Symbol(symbol)},
                transformations=_PARSE_TRANSFORMATIONS,
            )
        except (SyntaxError, TypeError, ValueError) as exc:
            raise ValueError(f"cannot parse {text!r} as a rational function in {symbol}") from exc
        return cls.from_expr(expr, symbol)

    @classmethod
    def from_expr(cls, expr: Any, symbol: str = DEFAULT_SYMBOL) -> RationalFunction:
        """Convert a sympy expression whose only free symbol is *symbol*."""

        try:
            return cls(coefficient_field(symbol).from_expr(expr))
        except (TypeError, ValueError, ZeroDivisionError, CoercionFailed) as exc:
            raise ValueError(f"{expr} is not a rational function in {symbol}") from exc

    # ------------------------------------------------------------------
    # Introspection
    # ------------------------------------------------------------------
    @property
    def symbol(self) -> str:
        return str(self._element.field.symbols[0])

    @property
    def numerator(self) -> QPoly:
        return self._element.numer

    @property
    def denominator(self) -> QPoly:
        return self._element.denom

    @property
    def element(self) -> FracElement:
        return self._element

    def is_constant(self) -> bool:
        return self._element.numer.is_ground and self._element.denom.is_ground

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        numer = self._element.numer
        denom = self._element.denom
        return from_qq(numer.LC if numer else QQ.zero) / from_qq(denom.LC)

    def is_polynomial(self) -> bool:
        return self._element.denom.is_ground

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------
    def _coerce(self, other: Any) -> FracElement | None:
        if isinstance(other, RationalFunction):
            if other._element.field != self._element.field:
                raise ValueError(f"cannot combine rational functions in {self.symbol} and {other.symbol}")
            return other._element
        if isinstance(other, (int, Fraction)):
            return self._element.field.ground_new(to_qq(other))
        return None

    def __add__(self, other: Any) -> RationalFunction:
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return RationalFunction(self._element + value)

    __radd__ = __add__

    def __sub__(self, other: Any) -> RationalFunction:
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return RationalFunction(self._element - value)

    def __rsub__(self, other: Any) -> RationalFunction:
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return RationalFunction(value - self._element)

    def __mul__(self, other: Any) -> RationalFunction:
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return RationalFunction(self._element * value)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> RationalFunction:
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        if not value:
            raise ZeroDivisionError(f"division of {self} by the zero rational function")
        return RationalFunction(self._element / value)

    def __rtruediv__(self, other: Any) -> RationalFunction:
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        if not self._element:
            raise ZeroDivisionError(f"division of {other} by the zero rational function")
        return RationalFunction(value / self._element)

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self._element)

    def __pos__(self) -> RationalFunction:
        return self

    def __pow__(self, exponent: int) -> RationalFunction:
        if exponent < 0 and not self._element:
            raise ZeroDivisionError("negative power of the zero rational function")
        if exponent == 0:
            return RationalFunction(self._element.field.one)
        return RationalFunction(self._element**exponent)

    def __bool__(self) -> bool:
        return bool(self._element)

    def __eq__(self, other: object) -> bool:
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return self._element == value

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.constant_value())
        return hash(self._element)

    # ------------------------------------------------------------------
    # Evaluation and serialization
    # ------------------------------------------------------------------
    def specialize(self, point: Scalar) -> Fraction:
        """Evaluate exactly at *point*; removable singularities are already cancelled."""

        at = Fraction(point)
        numer = self._element.numer
        denom = self._element.denom
        gen = numer.ring.gens[0]
        denom_value = from_qq(denom.evaluate(gen, to_qq(at)))
        if denom_value == 0:
            raise PoleError(at, str(self))
        return from_qq(numer.evaluate(gen, to_qq(at))) / denom_value

    def __str__(self) -> str:
        return to_string(self)

    def __repr__(self) -> str:
        return f"RationalFunction({to_string(self)!r})"


def _poly_to_string(poly: QPoly, symbol: str) -> str:
    if not poly:
        return "0"
    pieces: list[str] = []
    for (degree,), coeff in poly.terms():
        value = from_qq(coeff)
        magnitude = abs(value)
        if degree == 0:
            body = str(magnitude)
        else:
            power = symbol if degree == 1 else f"{symbol}^{degree}"
            body = power if magnitude == 1 else f"{magnitude}*{power}"
        if not pieces:
            pieces.append(f"-{body}" if value < 0 else body)
        else:
            pieces.append(f" - {body}" if value < 0 else f" + {body}")
    return "".join(pieces)


def to_string(value: RationalFunction | Scalar, symbol: str = DEFAULT_SYMBOL) -> str:
    """Deterministic descending-degree serialization, e.g. ``(-q^3 + 1)/(q + 1)``."""

    if isinstance(value, (int, Fraction)):
        return str(Fraction(value))
    numer = _poly_to_string(value.numerator, value.symbol)
    denom_poly = value.denominator
    if denom_poly == denom_poly.ring.one:
        return numer
    numer_text = numer if value.numerator.is_ground else f"({numer})"
    denom = _poly_to_string(denom_poly, value.symbol)
    denom_text = denom if denom_poly.is_ground else f"({denom})"
    return f"{numer_text}/{denom_text}"


def specialize(value: RationalFunction | Scalar, point: Scalar) -> Fraction:
    """Exact evaluation of a rational function (or pass-through of a scalar)."""

    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    return value.specialize(point)


def as_scalar_if_constant(value: RationalFunction) -> RationalFunction | Fraction:
    return value.constant_value() if value.is_constant() else value


__all__ = [
    "BigRational",
    "DEFAULT_SYMBOL",
    "LAMBDA_SYMBOL",
    "PoleError",
    "QPoly",
    "RationalFunction",
    "Scalar",
    "as_scalar_if_constant",
    "coefficient_field",
    "from_qq",
    "specialize",
    "to_qq",
    "to_string",
]
