"""q-Dyson Laurent polynomial and the rectangular coefficient extraction."""

__all__: list[str] = []
