"""Partitions, symmetric functions and Macdonald polynomials at t = q^m."""

__all__: list[str] = []
