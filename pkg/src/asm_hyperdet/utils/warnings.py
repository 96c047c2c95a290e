"""Standard diagnostic message catalogue for the toolkit."""

from __future__ import annotations

from typing import Final

WARNING_MESSAGES: Final[dict[str, str]] = {
    "BUDGET_EXCEEDED": "Term budget exceeded",
    "POLE_AT_POINT": "Rational function has a pole at the evaluation point",
    "ASM_CEILING": "Requested ASM side exceeds the enumeration ceiling",
    "DEGREE_CEILING": "Partition weight exceeds the symmetric-function degree ceiling",
    "ZERO_ENTRY": "Matrix entry inverted by a contributing ASM is zero",
    "DISPLAY_SIGN_3X3": "Printed 3x3 expansion disagrees with the ASM sum on the non-permutation term",
    "PHI_CONVENTION_MISMATCH": "Sign-factor convention does not reproduce the identity at this point",
    "PHI_UNRESOLVED": "No single sign-factor convention validates the whole grid",
    "SCALING_LAW": "Slot action scaling law checked empirically",
    "ZERO_RATIO": "Vandermonde numerator vanishes; ratio identity holds trivially",
    "DYSON_LIMIT": "Dyson expansion size outside the configured bounds",
    "CACHE_MISS": "Macdonald cache entry missing; constructed by Gram-Schmidt",
    "INPUT_FORMAT": "Malformed input document",
    "UNKNOWN_IDENTITY": "Unknown verification identity",
    "CONFIG": "Invalid configuration",
    "CACHE_IO": "Macdonald cache I/O failure",
    "USAGE": "Invalid command-line usage",
}


def format_warning(code: str, detail: str | None = None) -> str:
    """Return a formatted warning string with catalogue lookup."""

    base = WARNING_MESSAGES.get(code, code)
    if detail:
        return f"[{code}] {base}: {detail}"
    return f"[{code}] {base}"


__all__ = ["format_warning", "WARNING_MESSAGES"]
