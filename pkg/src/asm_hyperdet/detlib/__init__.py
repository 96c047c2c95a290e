"""Classical and lambda-deformed determinants, the lambda-Vandermonde product and Pfaffians."""

__all__: list[str] = []
