"""Alternating sign matrices and their statistics."""

__all__: list[str] = []
