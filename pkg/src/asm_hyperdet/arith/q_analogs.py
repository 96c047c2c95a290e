"""q-Pochhammer symbols and lambda-factorials."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .rational_function import DEFAULT_SYMBOL, LAMBDA_SYMBOL, RationalFunction, Scalar


def q_power(exponent: int, symbol: str = DEFAULT_SYMBOL) -> RationalFunction:
    """``symbol**exponent`` for any integer exponent."""

    return RationalFunction.gen(symbol) ** exponent


@lru_cache(maxsize=None)
def qpochhammer(a_power: int, n: int, symbol: str = DEFAULT_SYMBOL) -> RationalFunction:
    """``(q^a; q)_n = prod_{i=0}^{n-1} (1 - q^{a+i})`` with ``(x; q)_0 = 1``."""

    if n < 0:
        raise ValueError(f"qpochhammer length must be non-negative, got {n}")
    result = RationalFunction.constant(1, symbol)
    for i in range(n):
        result = result * (1 - q_power(a_power + i, symbol))
    return result


def lambda_integer(k: int, base: Scalar | RationalFunction | None = None) -> RationalFunction | Fraction:
    """``[k]_lambda = 1 + lambda + ... + lambda^{k-1}`` (``[0] = 0``)."""

    if k < 0:
        raise ValueError(f"lambda-integer index must be non-negative, got {k}")
    lam: RationalFunction | Fraction
    if base is None:
        lam = RationalFunction.gen(LAMBDA_SYMBOL)
    elif isinstance(base, RationalFunction):
        lam = base
    else:
        lam = Fraction(base)
    total: RationalFunction | Fraction = Fraction(0)
    power: RationalFunction | Fraction = Fraction(1)
    for _ in range(k):
        total = total + power
        power = power * lam
    return total


def lambda_factorial(n: int, base: Scalar | RationalFunction | None = None) -> RationalFunction | Fraction:
    """``[n]_lambda! = prod_{k=1}^n [k]_lambda``; ``base=None`` keeps lambda symbolic.

    At ``base = -1`` the value is zero for ``n >= 2``; callers that divide by it must
    treat that as a pole.
    """

    if n < 0:
        raise ValueError(f"lambda-factorial index must be non-negative, got {n}")
    result: RationalFunction | Fraction = Fraction(1)
    for k in range(1, n + 1):
        result = result * lambda_integer(k, base)
    return result


def q_integer(k: int, symbol: str = DEFAULT_SYMBOL) -> RationalFunction:
    """``[k]_q`` as a polynomial in the named variable."""

    total = lambda_integer(k, RationalFunction.gen(symbol))
    if isinstance(total, Fraction):
        return RationalFunction.constant(total, symbol)
    return total


__all__ = ["lambda_factorial", "lambda_integer", "q_integer", "q_power", "qpochhammer"]
