"""Hypermatrices, Cayley's hyperdeterminant and its lambda-deformation."""

__all__: list[str] = []
