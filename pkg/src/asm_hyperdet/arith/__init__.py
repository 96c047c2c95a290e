"""Exact coefficient arithmetic: rationals, rational functions in one variable, q-analogs."""

__all__: list[str] = []
