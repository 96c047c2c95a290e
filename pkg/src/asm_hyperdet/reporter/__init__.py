"""Report generation outputs for the console, JSON logs and Excel."""

__all__: list[str] = []
