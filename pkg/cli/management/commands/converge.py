"""
Truncation study of an infinite-state process.
Path: cli/management/commands/converge.py

Usage:
    python manage.py converge --config run.yaml --out results/

Solves the problem truncated to each K of ``converge.K_list`` and writes the
J(K) table with successive differences. Exit 1 when a truncation exceeds the
edge budget.
"""
from cli.base import BaseCommand
from cli.services import prepare_run
from errors import EXIT_OK
from oracle.services import SAMPLE_TIMES, converge_truncation, convergence_rows
from utils.export import write_yaml

CONVERGENCE_COLUMNS = ("K", "edges", "J", "difference")


class Command(BaseCommand):
    help = "Tabulate J(K) over truncation levels K"

    def handle(self, **options):
        context = prepare_run(options["config"], options["out"], options["seed"], build=False)
        report = converge_truncation(
            context.spec,
            context.config.converge.K_list,
            data=context.data,
            backend=context.config.solve.backend,
        )
        self.write_table(
            context.out / "convergence.csv",
            CONVERGENCE_COLUMNS,
            convergence_rows(report),
            self.table_format(context, options),
        )
        summary = {
            "K": [row.K for row in report.rows],
            "J": [row.energy for row in report.rows],
            "differences": report.differences,
            "decreasing": report.decreasing,
            "flat": report.flat,
            "sample_times": list(SAMPLE_TIMES),
            "root_control": {row.K: row.root_control for row in report.rows},
        }
        self.track(write_yaml(context.out / "convergence.yaml", summary))
        for row in report.rows:
            difference = "" if row.difference is None else f"{row.difference:.3e}"
            self.stdout.write(f"K={row.K:<4} edges={row.edges:<8} J={row.energy:.17g} {difference}")
        return self.finish(context, "converge", EXIT_OK)
