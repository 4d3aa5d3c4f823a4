"""
Loguru-based logging setup for the solver, its CLI and the numerical libraries.
Path: config/logger.py
"""
import logging
import sys
from contextvars import ContextVar
from pathlib import Path

from loguru import logger

from config.settings import settings

# ------------------------------------------------------------
# Run-id propagation (correlation ids: CLI run -> logs)
# ------------------------------------------------------------
run_id_ctx: ContextVar[str] = ContextVar("run_id", default="-")


def _patch_run_id(record):
    """Inject the current run id (set by the CLI command base) into every record."""
    record["extra"]["run_id"] = run_id_ctx.get()


# ------------------------------------------------------------
# Remove default Loguru logger
# ------------------------------------------------------------
logger.remove()
logger = logger.patch(_patch_run_id)
# ------------------------------------------------------------
# Format strings
# ------------------------------------------------------------
console_format = (
    "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> | "
    "run_id={extra[run_id]} | <level>{message}</level>"
)
file_format = (
    "{time:YYYY-MM-DD HH:mm:ss} | {level: <8}\n"
    "Module: {name} | Function: {function} | Line: {line}\n"
    "run_id={extra[run_id]} | extra={extra}\n"
    "{message}\n"
    "------------------------------------------------------------"
)
# ------------------------------------------------------------
# Console sink
# ------------------------------------------------------------
logger.add(
    sys.stderr,
    level=settings.CONSOLE_LEVEL,
    format=console_format,
    colorize=True,
    backtrace=True,
    diagnose=False,
)
# ------------------------------------------------------------
# Optional rotating file sinks (TTC_LOG_DIR)
# ------------------------------------------------------------
if settings.LOG_DIR:
    LOG_DIR = Path(settings.LOG_DIR)
    LOG_DIR.mkdir(parents=True, exist_ok=True)
    for level_name in ["DEBUG", "INFO", "WARNING", "ERROR"]:
        logger.add(
            LOG_DIR / "{time:YYYY}" / "{time:MM}" / "{time:DD}" / f"{level_name.lower()}.log",
            level=level_name,
            format=file_format,
            rotation="10 MB",
            retention="14 days",
            compression="zip",
            encoding="utf-8",
            enqueue=True,
            backtrace=True,
            diagnose=False,
        )


def add_run_log(out_dir: Path) -> int:
    """Attach a ``run.log`` sink inside a CLI output directory; returns the sink id."""
    return logger.add(
        Path(out_dir) / "run.log",
        level="DEBUG",
        format=file_format,
        encoding="utf-8",
        backtrace=True,
        diagnose=False,
    )


# ------------------------------------------------------------
# Intercept stdlib logging (scipy, warnings)
# ------------------------------------------------------------
class InterceptHandler(logging.Handler):
    """Redirect all logs from Python logging (numerical libraries, warnings) to Loguru"""

    def emit(self, record):
        try:
            level = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno
        logger.opt(depth=6, exception=record.exc_info).log(level, record.getMessage())


def setup_library_logging():
    """Route stdlib loggers and ``warnings`` through Loguru (called by the CLI entry point)."""
    logging.root.handlers = []
    logging.basicConfig(handlers=[InterceptHandler()], level=0)
    logging.captureWarnings(True)
    for name in ["py.warnings", "scipy", "numpy"]:
        logging.getLogger(name).handlers = [InterceptHandler()]
        logging.getLogger(name).propagate = False
