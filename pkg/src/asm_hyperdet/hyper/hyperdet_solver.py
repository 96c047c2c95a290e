"""Cayley's hyperdeterminant and the lambda-hyperdeterminant over ASM tuples."""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from itertools import permutations, product
from math import factorial
from time import perf_counter
from typing import Any, Hashable, Sequence, Tuple

from ..arith.q_analogs import lambda_factorial
from ..asm.alternating_sign import Asm, alternating_sign_matrices, permutation_inversions, permutation_matrices
from ..utils.errors import check_budget
from .hypermatrix import HyperMatrix, Index

DEFAULT_BUDGET_TERMS = 10**7

Profile = Tuple[Tuple[int, int], ...]


class PhiConvention(str, Enum):
    """Exponent signs on the ``(1 - lam^.)`` factors of the generalized sign factor."""

    PAPER_LITERAL = "paper"
    PROOF_CONSISTENT = "proof"

    @classmethod
    def parse(cls, text: str | PhiConvention) -> PhiConvention:
        if isinstance(text, PhiConvention):
            return text
        lookup = {
            "paper": cls.PAPER_LITERAL,
            "paper_literal": cls.PAPER_LITERAL,
            "proof": cls.PROOF_CONSISTENT,
            "proof_consistent": cls.PROOF_CONSISTENT,
        }
        try:
            return lookup[str(text).strip().lower()]
        except KeyError as exc:
            raise ValueError(f"unknown sign-factor convention {text!r}; use 'paper' or 'proof'") from exc


class _ProductGrouper:
    """Collects weighted entry products keyed by the sorted multiset of entry keys."""

    def __init__(self, matrix: HyperMatrix) -> None:
        self.matrix = matrix
        self.weights: dict[Tuple[Hashable, ...], Any] = {}
        self.values: dict[Hashable, Any] = {}

    def keys_for(self, indices: Sequence[Index]) -> Tuple[Hashable, ...] | None:
        keys = []
        for index in indices:
            key = self.matrix.key(index)
            if key not in self.values:
                self.values[key] = self.matrix[index]
            if not self.values[key]:
                return None
            keys.append(key)
        return tuple(sorted(keys))  # type: ignore[type-var]

    def add(self, keys: Tuple[Hashable, ...], weight: Any) -> None:
        if keys in self.weights:
            self.weights[keys] = self.weights[keys] + weight
        else:
            self.weights[keys] = weight

    def total(self) -> Any:
        result: Any = Fraction(0)
        for keys, weight in self.weights.items():
            if not weight:
                continue
            term: Any = weight
            for key in keys:
                term = term * self.values[key]
            result = result + term
        return result


def cayley_terms(n: int, m: int, fix_first: bool = True) -> int:
    return factorial(n) ** (2 * m - 1 if fix_first else 2 * m)


def cayley_hyperdet(
    matrix: HyperMatrix,
    budget: int = DEFAULT_BUDGET_TERMS,
    fix_first: bool = True,
) -> Any:
    """``(1/n!) sum_{sigma_1..sigma_2m} prod sgn(sigma_r) prod_i A(sigma_1(i), ..., sigma_2m(i))``.

    The summand is invariant under relabelling ``i``, so by default ``sigma_1`` is pinned to
    the identity and the ``1/n!`` dropped; ``fix_first=False`` runs the full sum.
    """

    n, dim = matrix.n, matrix.dim
    check_budget("cayley_hyperdet", cayley_terms(n, matrix.m, fix_first), budget)

    perms = [(p, -1 if permutation_inversions(p) % 2 else 1) for p in permutations(range(1, n + 1))]
    identity = [(tuple(range(1, n + 1)), 1)]
    slots = [identity if fix_first else perms] + [perms] * (dim - 1)
    grouper = _ProductGrouper(matrix)
    for choice in product(*slots):
        sign = 1
        for _, s in choice:
            sign *= s
        indices = [tuple(word[i] for word, _ in choice) for i in range(n)]
        keys = grouper.keys_for(indices)
        if keys is not None:
            grouper.add(keys, sign)
    total = grouper.total()
    return total if fix_first else total / factorial(n)


def _sign_base(slot: int, m: int, lam: Any, convention: PhiConvention) -> Tuple[Any, Any]:
    """``(-lam^e, 1 - lam^f)`` for the 0-based slot of a ``2m`` tuple."""

    if slot < m:
        r = slot + 1
        sign_power = r - 1
        factor_power = r - 1 if convention is PhiConvention.PAPER_LITERAL else 1 - r
    else:
        r = slot - m + 1
        sign_power = r
        factor_power = r if convention is PhiConvention.PAPER_LITERAL else -r
    return -(lam**sign_power), 1 - lam**factor_power


def phi_from_profile(profile: Profile, lam: Any, convention: PhiConvention) -> Any:
    """Sign factor from the per-slot ``(i(X_r), n(X_r))`` statistics."""

    convention = PhiConvention.parse(convention)
    m = len(profile) // 2
    value: Any = Fraction(1)
    for slot, (inversions, negatives) in enumerate(profile):
        if negatives:
            _, base = _sign_base(slot, m, lam, convention)
            if not base:
                return Fraction(0)
    for slot, (inversions, negatives) in enumerate(profile):
        sign, base = _sign_base(slot, m, lam, convention)
        if inversions:
            value = value * sign**inversions
        if negatives:
            value = value * base**negatives
    return value


def phi(asms: Sequence[Asm], lam: Any, convention: PhiConvention) -> Any:
    """Generalized sign factor of a ``2m``-tuple of ASMs of equal side."""

    if len(asms) < 2 or len(asms) % 2:
        raise ValueError(f"sign factor needs an even number (>= 2) of ASMs, got {len(asms)}")
    if len({asm.n for asm in asms}) != 1:
        raise ValueError("sign factor needs ASMs of equal side")
    if isinstance(lam, int):
        lam = Fraction(lam)
    profile = tuple((asm.inversion_number, asm.negative_count) for asm in asms)
    return phi_from_profile(profile, lam, convention)


def lambda_terms(n: int, m: int, full_first_slot: bool = False) -> int:
    first = len(alternating_sign_matrices(n)) if full_first_slot else factorial(n)
    return first * len(alternating_sign_matrices(n)) ** (2 * m - 1)


def _lambda_sum(
    matrix: HyperMatrix,
    lam: Any,
    convention: PhiConvention,
    budget: int,
    full_first_slot: bool,
) -> Tuple[Any, dict[str, Any]]:
    n, dim = matrix.n, matrix.dim
    estimate = lambda_terms(n, matrix.m, full_first_slot)
    check_budget("lambda_hyperdet", estimate, budget)

    asms = alternating_sign_matrices(n)
    first = asms if full_first_slot else permutation_matrices(n)
    describe = {asm: (asm.generalized_permutation, (asm.inversion_number, asm.negative_count)) for asm in asms}

    counts: dict[Tuple[Tuple[Hashable, ...], Profile], int] = {}
    grouper = _ProductGrouper(matrix)
    skipped = 0
    for choice in product(first, *([asms] * (dim - 1))):
        # n(X_1) > 0 kills the term under both conventions
        if choice[0].negative_count:
            skipped += 1
            continue
        words = [describe[asm][0] for asm in choice]
        indices = [tuple(word[i] for word in words) for i in range(n)]
        keys = grouper.keys_for(indices)
        if keys is None:
            continue
        profile = tuple(describe[asm][1] for asm in choice)
        counts[(keys, profile)] = counts.get((keys, profile), 0) + 1

    phi_cache: dict[Profile, Any] = {}
    for (keys, profile), count in counts.items():
        if profile not in phi_cache:
            phi_cache[profile] = phi_from_profile(profile, lam, convention)
        weight = phi_cache[profile]
        if weight:
            grouper.add(keys, weight * count)

    stats = {
        "tuples": estimate,
        "skipped_first_slot": skipped,
        "profiles": len(phi_cache),
        "entry_multisets": len(grouper.weights),
    }
    return grouper.total(), stats


def lambda_hyperdet(
    matrix: HyperMatrix,
    lam: Any,
    convention: PhiConvention | str,
    budget: int = DEFAULT_BUDGET_TERMS,
    full_first_slot: bool = False,
) -> Any:
    """``(1 / [n]_lam!) * sum phi(X_1..X_2m) prod_i A(X_1(i), ..., X_2m(i))``.

    ``convention`` has no default.  ``X_1`` runs over permutation matrices unless
    ``full_first_slot`` is set; the extra terms carry a vanishing sign factor.
    """

    value, _ = solve_lambda_hyperdet(matrix, lam, convention, budget, full_first_slot)
    return value


def solve_lambda_hyperdet(
    matrix: HyperMatrix,
    lam: Any,
    convention: PhiConvention | str,
    budget: int = DEFAULT_BUDGET_TERMS,
    full_first_slot: bool = False,
) -> Tuple[Any, dict[str, Any]]:
    """Value of :func:`lambda_hyperdet` together with a summation trace."""

    convention = PhiConvention.parse(convention)
    if isinstance(lam, int):
        lam = Fraction(lam)
    started = perf_counter()
    total, stats = _lambda_sum(matrix, lam, convention, budget, full_first_slot)
    prefactor = lambda_factorial(matrix.n, lam)
    if not prefactor:
        raise ZeroDivisionError(f"[{matrix.n}]_lambda! vanishes at lambda={lam}")
    value = total / prefactor if total else total
    trace = {
        "n": matrix.n,
        "dim": matrix.dim,
        "convention": convention.value,
        "full_first_slot": full_first_slot,
        "runtime_s": perf_counter() - started,
        **stats,
    }
    return value, trace


__all__ = [
    "DEFAULT_BUDGET_TERMS",
    "PhiConvention",
    "Profile",
    "cayley_hyperdet",
    "cayley_terms",
    "lambda_hyperdet",
    "lambda_terms",
    "phi",
    "phi_from_profile",
    "solve_lambda_hyperdet",
]
