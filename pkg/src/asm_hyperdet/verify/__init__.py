"""Identity harness producing structured verification reports."""

__all__: list[str] = []
