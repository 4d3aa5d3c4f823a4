"""
Minimal command base shared by the solver commands.
Path: cli/base.py

Commands follow the management-command shape: a ``help`` string,
``add_arguments(parser)`` for extra flags and ``handle(**options)`` returning
an exit code. Every command takes ``--config``, ``--out``, ``--seed`` and
``--format``; ``AppError`` is mapped onto its ``exit_code``.
"""
import argparse
import sys
import uuid
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence, TextIO

from cli.services import RunContext, ensure_output_dir, write_manifest
from config.logger import add_run_log, logger, run_id_ctx
from errors import EXIT_CONFIG, EXIT_OK, AppError, E
from utils.export import write_table


class OutputWrapper:
    """Line-oriented writer around a text stream."""

    def __init__(self, out: TextIO):
        self._out = out

    def write(self, msg: str = "", ending: str = "\n") -> None:
        if ending and not msg.endswith(ending):
            msg += ending
        self._out.write(msg)

    def flush(self) -> None:
        if hasattr(self._out, "flush"):
            self._out.flush()


class CommandParser(argparse.ArgumentParser):
    """Argument parser that reports usage errors as ``CONFIG__INVALID``."""

    def error(self, message: str):
        raise AppError(E.CONFIG__INVALID, details={"usage": message})


class BaseCommand:
    help = ""

    def __init__(self, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None):
        self.stdout = OutputWrapper(stdout or sys.stdout)
        self.stderr = OutputWrapper(stderr or sys.stderr)
        self.outputs: list[Path] = []

    def create_parser(self, prog_name: str, subcommand: str) -> CommandParser:
        parser = CommandParser(prog=f"{Path(prog_name).name} {subcommand}", description=self.help or None)
        parser.add_argument("--config", required=True, type=Path, help="Run configuration (YAML or JSON)")
        parser.add_argument("--out", required=True, type=Path, help="Output directory")
        parser.add_argument("--seed", type=int, default=None, help="Overrides the config seed")
        parser.add_argument(
            "--format",
            choices=["csv", "xlsx"],
            default=None,
            help="Table format; defaults to the config's output_format",
        )
        self.add_arguments(parser)
        return parser

    def add_arguments(self, parser: CommandParser) -> None:
        """Entry point for subclassed commands to add custom arguments."""

    def handle(self, **options: Any) -> int:
        raise NotImplementedError("subclasses of BaseCommand must provide a handle() method")

    def run_from_argv(self, argv: Sequence[str]) -> int:
        """``argv`` is ``[prog, subcommand, *flags]``; returns the process exit code."""
        subcommand = argv[1] if len(argv) > 1 else self.__module__.rsplit(".", 1)[-1]
        token = run_id_ctx.set(uuid.uuid4().hex[:12])
        sink = None
        exit_code = EXIT_CONFIG
        try:
            options = vars(self.create_parser(argv[0], subcommand).parse_args(list(argv[2:])))
            ensure_output_dir(options["out"])
            sink = add_run_log(options["out"])
            logger.bind(command=subcommand, options={k: str(v) for k, v in options.items()}).info("cli.command_started")
            exit_code = self.handle(**options) or EXIT_OK
        except AppError as exc:
            logger.bind(command=subcommand, code=exc.code, details=exc.details).error("cli.command_failed")
            self.stderr.write(f"error: {exc}")
            exit_code = exc.exit_code
        except Exception:
            logger.bind(command=subcommand).exception("cli.command_crashed")
            self.stderr.write(f"error: {E.INTERNAL__ERROR}")
            exit_code = EXIT_CONFIG
        finally:
            logger.bind(command=subcommand, exit_code=exit_code).info("cli.command_finished")
            if sink is not None:
                logger.remove(sink)
            run_id_ctx.reset(token)
        return exit_code

    # ------------------------------------------------------------
    # Helpers for subclasses
    # ------------------------------------------------------------
    @staticmethod
    def table_format(context: RunContext, options: dict) -> str:
        return options.get("format") or context.config.output_format

    def write_table(self, path: Path, headers: Sequence[str], rows: Iterable[Any], fmt: str) -> Path:
        written = write_table(path, headers, rows, fmt)
        self.outputs.append(written)
        return written

    def track(self, path: Path) -> Path:
        self.outputs.append(Path(path))
        return Path(path)

    def finish(self, context: RunContext, command: str, exit_code: int, *, fixtures: Iterable[Path] = ()) -> int:
        """Write the manifest over every tracked output and return ``exit_code``."""
        manifest = write_manifest(context, command, self.outputs, fixtures=list(fixtures), exit_code=exit_code)
        self.stdout.write(f"manifest: {manifest}")
        return exit_code
