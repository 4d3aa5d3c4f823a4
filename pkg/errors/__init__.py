"""Central error codes and exceptions."""

from errors.catalog import E
from errors.exceptions import EXIT_CONFIG, EXIT_OK, EXIT_TOLERANCE, AppError

__all__ = ["AppError", "E", "EXIT_CONFIG", "EXIT_OK", "EXIT_TOLERANCE"]
