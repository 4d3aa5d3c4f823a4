"""
Solve the configured tree problem.
Path: cli/management/commands/solve.py

Usage:
    python manage.py solve --config run.yaml --out results/

Writes trajectory and control tables, tree.yaml, report.yaml and manifest.yaml.
Exit 2 when a constraint residual or the fixture comparison is out of tolerance.
"""
from pathlib import Path

from bvp.services import TRAJECTORY_COLUMNS, apriori_ratio, interval_equivalence, solve, trajectory_rows
from cli.base import BaseCommand
from cli.services import prepare_run
from config.logger import logger
from config.settings import settings
from control.services import CONTROL_COLUMNS, control_rows, extract_controls
from errors import EXIT_OK, EXIT_TOLERANCE, E
from oracle.services import fixture_deviation, load_fixture
from tree.services import export_tree
from utils.export import write_yaml


def resolve_fixture(config_path: Path, fixture: Path) -> Path:
    """Relative fixture paths are taken relative to the config file."""
    return fixture if fixture.is_absolute() else config_path.parent / fixture


class Command(BaseCommand):
    help = "Solve the tree problem and write trajectory, controls and report"

    def handle(self, **options):
        context = prepare_run(options["config"], options["out"], options["seed"])
        section = context.config.solve
        fmt = self.table_format(context, options)
        out = context.out
        tree = context.tree

        trajectory = solve(tree, context.data, backend=section.backend, check=False)
        family = extract_controls(trajectory)
        self.write_table(out / "trajectory.csv", TRAJECTORY_COLUMNS, trajectory_rows(trajectory, section.samples_per_edge), fmt)
        self.write_table(out / "controls.csv", CONTROL_COLUMNS, control_rows(family, section.samples_per_edge), fmt)
        self.track(export_tree(tree, out / "tree.yaml"))

        apriori = apriori_ratio(tree, samples=section.apriori_samples, seed=context.seed, backend=section.backend)
        interval_deviation = interval_equivalence(trajectory)
        interval_bound = settings.RESIDUAL_TOL * max(1.0, trajectory.scale)

        fixtures = []
        fixture_report = None
        if section.fixture is not None:
            fixture_path = resolve_fixture(context.config_path, section.fixture)
            payload = load_fixture(fixture_path, instance_hash=context.instance_hash)
            deviation = fixture_deviation(payload, family.energy)
            fixture_report = {
                "path": str(section.fixture),
                "extrapolated_energy": payload["extrapolated_energy"],
                "deviation": deviation,
                "tolerance": section.fixture_tol,
                "passed": deviation <= section.fixture_tol,
            }
            if not fixture_report["passed"]:
                fixture_report["code"] = E.FIXTURE__MISMATCH
                logger.bind(**fixture_report).warning("oracle.fixture_mismatch")
            fixtures.append(fixture_path)

        passed = trajectory.diagnostics.passed and (fixture_report is None or fixture_report["passed"])
        report = {
            "J": family.energy,
            "edges": tree.edge_count,
            "leaves": len(tree.leaves),
            "passed": passed,
            "diagnostics": trajectory.diagnostics.as_dict(),
            "apriori": apriori.as_dict(),
            "interval_equivalent": interval_deviation is not None and interval_deviation <= interval_bound,
            "interval_deviation": interval_deviation,
            "fixture": fixture_report,
        }
        self.track(write_yaml(out / "report.yaml", report))

        exit_code = EXIT_OK if passed else EXIT_TOLERANCE
        logger.bind(J=family.energy, passed=passed, instance_hash=context.instance_hash).info("cli.solve_finished")
        self.stdout.write(f"J = {family.energy:.17g}")
        self.stdout.write(f"max residual = {trajectory.diagnostics.max_residual:.3e} ({'ok' if passed else 'FAILED'})")
        return self.finish(context, "solve", exit_code, fixtures=fixtures)
