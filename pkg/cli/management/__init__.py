"""
Command registry and dispatcher used by ``manage.py``.
Path: cli/management/__init__.py
"""
import sys
from importlib import import_module
from typing import Optional, Sequence

from config.logger import setup_library_logging
from errors import EXIT_CONFIG

COMMANDS = ("solve", "playback", "verify", "converge", "fixture")


def load_command_class(name: str):
    module = import_module(f"cli.management.commands.{name}")
    return module.Command()


def main_help_text(prog_name: str) -> str:
    lines = [f"Usage: {prog_name} <command> --config <file> --out <dir> [--seed N] [--format csv|xlsx]", "", "Commands:"]
    for name in COMMANDS:
        lines.append(f"    {name:<10}{load_command_class(name).help}")
    return "\n".join(lines)


def execute_from_command_line(argv: Optional[Sequence[str]] = None) -> int:
    """Dispatch ``argv[1]`` to its command; unknown commands exit with 1."""
    argv = list(sys.argv if argv is None else argv)
    prog_name = argv[0] if argv else "manage.py"
    subcommand = argv[1] if len(argv) > 1 else "help"
    if subcommand in ("help", "-h", "--help"):
        sys.stdout.write(main_help_text(prog_name) + "\n")
        return 0
    if subcommand not in COMMANDS:
        sys.stderr.write(f"Unknown command: {subcommand!r}\n{main_help_text(prog_name)}\n")
        return EXIT_CONFIG
    setup_library_logging()
    return load_command_class(subcommand).run_from_argv(argv)


def call_command(name: str, *args: str) -> int:
    """Run a command in-process: ``call_command("solve", "--config", path, "--out", out)``."""
    return execute_from_command_line(["manage.py", name, *(str(a) for a in args)])
