#!/usr/bin/env python
"""
Command-line entry point.
Path: manage.py

Usage:
    python manage.py solve --config run.yaml --out results/
"""
import sys


def main():
    """Run a solver command and exit with its code."""
    from cli.management import execute_from_command_line

    sys.exit(execute_from_command_line(sys.argv))


if __name__ == "__main__":
    main()
