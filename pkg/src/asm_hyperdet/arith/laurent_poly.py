"""Sparse multivariate Laurent polynomials over an exact coefficient ring.

Coefficients are anything closed under ``+``, ``-`` and ``*`` with a meaningful ``bool``:
``Fraction``, :class:`RationalFunction`, or symmetric functions for the Dyson generating
series.  Zero coefficients are never stored.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator, Mapping, Sequence

from sympy import Add, Mul, Symbol
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from .rational_function import DEFAULT_SYMBOL, RationalFunction, to_string

Exponent = tuple[int, ...]


def _normalize_coefficient(value: Any) -> Any:
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    return value


def _is_scalar(value: Any) -> bool:
    return isinstance(value, (int, Fraction, RationalFunction))


class LaurentPoly:
    """Immutable sparse map from exponent vectors (length ``nvars``) to coefficients."""

    __slots__ = ("nvars", "names", "_terms")

    def __init__(
        self,
        nvars: int,
        terms: Mapping[Exponent, Any] | None = None,
        names: Iterable[str] | None = None,
    ) -> None:
        if nvars < 0:
            raise ValueError(f"number of variables must be non-negative, got {nvars}")
        self.nvars = nvars
        self.names = tuple(names) if names is not None else tuple(f"z{i + 1}" for i in range(nvars))
        if len(self.names) != nvars:
            raise ValueError(f"expected {nvars} variable names, got {len(self.names)}")
        cleaned: dict[Exponent, Any] = {}
        for exps, coeff in (terms or {}).items():
            key = tuple(int(e) for e in exps)
            if len(key) != nvars:
                raise ValueError(f"exponent vector {key} does not have length {nvars}")
            value = _normalize_coefficient(coeff)
            if value:
                cleaned[key] = value
        self._terms = cleaned

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------
    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exponent, Any], names: tuple[str, ...]) -> LaurentPoly:
        poly = cls.__new__(cls)
        poly.nvars = nvars
        poly.names = names
        poly._terms = terms
        return poly

    @classmethod
    def constant(cls, value: Any, nvars: int, names: Iterable[str] | None = None) -> LaurentPoly:
        return cls(nvars, {(0,) * nvars: value}, names)

    @classmethod
    def variable(cls, index: int, nvars: int, names: Iterable[str] | None = None) -> LaurentPoly:
        """The 0-based ``index``-th variable."""

        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): Fraction(1)}, names)

    @classmethod
    def monomial(cls, exps: Exponent, coeff: Any = 1, names: Iterable[str] | None = None) -> LaurentPoly:
        return cls(len(exps), {tuple(exps): coeff}, names)

    @classmethod
    def generators(cls, nvars: int, names: Iterable[str] | None = None) -> list[LaurentPoly]:
        names_tuple = tuple(names) if names is not None else None
        return [cls.variable(i, nvars, names_tuple) for i in range(nvars)]

    # ------------------------------------------------------------------
    # Introspection
    # ------------------------------------------------------------------
    @property
    def terms(self) -> dict[Exponent, Any]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponent, Any]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, exps: Exponent) -> Any:
        return self._terms.get(tuple(exps), Fraction(0))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0,) * self.nvars in self._terms)

    def exponent_bounds(self) -> list[tuple[int, int]]:
        """Per-variable ``(min, max)`` exponent over the support."""

        if not self._terms:
            return [(0, 0)] * self.nvars
        return [
            (min(exps[i] for exps in self._terms), max(exps[i] for exps in self._terms))
            for i in range(self.nvars)
        ]

    def map_coefficients(self, func: Callable[[Any], Any]) -> LaurentPoly:
        return LaurentPoly(self.nvars, {exps: func(c) for exps, c in self._terms.items()}, self.names)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------
    def _check_compatible(self, other: LaurentPoly) -> None:
        if other.nvars != self.nvars:
            raise ValueError(f"cannot combine Laurent polynomials in {self.nvars} and {other.nvars} variables")

    def _lift(self, other: Any) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            self._check_compatible(other)
            return other
        if _is_scalar(other) or hasattr(other, "is_symmetric_function"):
            return LaurentPoly.constant(other, self.nvars, self.names)
        return None

    def __add__(self, other: Any) -> LaurentPoly:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        result = dict(self._terms)
        for exps, coeff in rhs._terms.items():
            if exps in result:
                total = result[exps] + coeff
                if total:
                    result[exps] = total
                else:
                    del result[exps]
            else:
                result[exps] = coeff
        return LaurentPoly._raw(self.nvars, result, self.names)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw(self.nvars, {e: -c for e, c in self._terms.items()}, self.names)

    def __sub__(self, other: Any) -> LaurentPoly:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Any) -> LaurentPoly:
        lhs = self._lift(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def __mul__(self, other: Any) -> LaurentPoly:
        if _is_scalar(other):
            if not other:
                return LaurentPoly._raw(self.nvars, {}, self.names)
            return self.map_coefficients(lambda c: c * other)
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        result: dict[Exponent, Any] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in rhs._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                product = c1 * c2
                if key in result:
                    result[key] = result[key] + product
                else:
                    result[key] = product
        return LaurentPoly(self.nvars, result, self.names)

    def __rmul__(self, other: Any) -> LaurentPoly:
        if _is_scalar(other):
            if not other:
                return LaurentPoly._raw(self.nvars, {}, self.names)
            return self.map_coefficients(lambda c: other * c)
        return self.__mul__(other)

    def inverse(self) -> LaurentPoly:
        """Inverse of a monomial; other elements are not units of the Laurent ring."""

        if not self._terms:
            raise ZeroDivisionError("the zero Laurent polynomial has no inverse")
        if not self.is_monomial():
            raise ValueError(f"{self} is not a monomial and has no Laurent inverse")
        ((exps, coeff),) = self._terms.items()
        return LaurentPoly._raw(self.nvars, {tuple(-e for e in exps): 1 / coeff}, self.names)

    def __pow__(self, exponent: int) -> LaurentPoly:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = LaurentPoly.constant(1, self.nvars, self.names)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __truediv__(self, other: Any) -> LaurentPoly:
        if _is_scalar(other):
            if not other:
                raise ZeroDivisionError("division of a Laurent polynomial by zero")
            return self.map_coefficients(lambda c: c / other)
        if isinstance(other, LaurentPoly):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other: Any) -> LaurentPoly:
        if _is_scalar(other):
            return self.inverse() * other
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        if len(rhs._terms) != len(self._terms):
            return False
        return all(exps in rhs._terms and rhs._terms[exps] == c for exps, c in self._terms.items())

    __hash__ = None  # type: ignore[assignment]

    # ------------------------------------------------------------------
    # Display
    # ------------------------------------------------------------------
    def _monomial_text(self, exps: Exponent) -> str:
        parts = []
        for name, e in zip(self.names, exps):
            if e == 1:
                parts.append(name)
            elif e != 0:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def to_string(self) -> str:
        """Descending-lex term order; coefficients in canonical rational-function form."""

        if not self._terms:
            return "0"
        pieces = []
        for exps in sorted(self._terms, reverse=True):
            coeff = self._terms[exps]
            mono = self._monomial_text(exps)
            if isinstance(coeff, (Fraction, RationalFunction)):
                text = to_string(coeff)
                if isinstance(coeff, RationalFunction) and not coeff.is_constant():
                    text = f"({text})"
            else:
                text = f"({coeff})"
            if not mono:
                pieces.append(text)
            elif text == "1":
                pieces.append(mono)
            elif text == "-1":
                pieces.append(f"-{mono}")
            else:
                pieces.append(f"{text}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.nvars}, {self.to_string()!r})"


def parse_laurent(text: str, names: Sequence[str], symbol: str = DEFAULT_SYMBOL) -> LaurentPoly:
    """Parse ``text`` as a Laurent polynomial in ``names`` with coefficients in ``QQ(symbol)``.

    Accepts anything that expands to a sum of monomials, e.g. ``"x1^2 - lam*x1*x2"`` or
    ``"a12*a21/a22"``; non-integer exponents on a variable are rejected.
    """

    local = {name: Symbol(name) for name in names}
    local[symbol] = Symbol(symbol)
    try:
        expr = parse_expr(text, local_dict=local, transformations=standard_transformations + (convert_xor,))
    except (SyntaxError, TypeError, ValueError) as exc:
        raise ValueError(f"cannot parse {text!r} as a Laurent polynomial") from exc

    index = {local[name]: i for i, name in enumerate(names)}
    terms: dict[Exponent, Any] = {}
    for term in Add.make_args(expr.expand()):
        exps = [0] * len(names)
        coefficient = []
        for factor in Mul.make_args(term):
            base, power = factor.as_base_exp()
            if base in index:
                if not power.is_Integer:
                    raise ValueError(f"non-integer exponent {power} on {base} in {text!r}")
                exps[index[base]] += int(power)
            else:
                coefficient.append(factor)
        coeff = RationalFunction.from_expr(Mul(*coefficient), symbol)
        key = tuple(exps)
        terms[key] = terms[key] + coeff if key in terms else coeff
    return LaurentPoly(len(names), terms, names)


__all__ = ["Exponent", "LaurentPoly", "parse_laurent"]
