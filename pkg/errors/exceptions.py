"""Typed errors raised from services and mapped to CLI exit codes."""

# CLI exit-code contract
EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_TOLERANCE = 2


class AppError(Exception):
    """Structured error with a catalog code, a CLI exit code, and details."""

    def __init__(
        self,
        code: str,
        exit_code: int = EXIT_CONFIG,
        details: dict | None = None,
    ) -> None:
        self.code = code
        self.exit_code = exit_code
        self.details = details or {}
        super().__init__(code)

    def __str__(self) -> str:
        if not self.details:
            return self.code
        rendered = ", ".join(f"{k}={v}" for k, v in self.details.items())
        return f"{self.code} ({rendered})"
