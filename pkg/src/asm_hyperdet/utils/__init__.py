"""Shared error types and the diagnostic message catalogue."""

__all__: list[str] = []
