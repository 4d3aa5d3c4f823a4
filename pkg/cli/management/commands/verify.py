"""
Run the verification battery on the configured instance.
Path: cli/management/commands/verify.py

Usage:
    python manage.py verify --config run.yaml --out results/

Writes verify.yaml with one entry per check and an overall verdict; exit 2
when any check fails. ``verify.corrupt_c2`` shifts every c₂ of the solved
trajectory before the certificate runs (negative control).
"""
import numpy as np

from bvp.services import apriori_ratio, compare_backends, solve, superposition_defect
from cli.base import BaseCommand
from cli.services import RunContext, prepare_run
from config.logger import logger
from config.settings import settings
from control.services import (
    control_balance,
    corrupt_trajectory,
    extract_controls,
    forward_integrate,
    optimality_certificate,
    playback_all,
    rng_for,
)
from errors import EXIT_OK, EXIT_TOLERANCE
from oracle.services import discretize, hermitian_defect, min_eigenvalue, operator_matrix
from utils.export import write_yaml


def operator_checks(context: RunContext) -> dict:
    """Hermitian defect across the mesh ladder and the smallest eigenvalue per mesh."""
    section = context.config.verify
    meshes = sorted(section.meshes)
    instances = [discretize(context.tree, m) for m in meshes]
    largest = max(i.node_count for i in instances)
    if largest > section.operator_node_limit:
        return {"skipped": True, "passed": True, "node_count": largest, "limit": section.operator_node_limit}
    defects, eigenvalues = [], []
    for instance in instances:
        op = operator_matrix(instance)
        defects.append(hermitian_defect(op))
        eigenvalues.append(min_eigenvalue(op))
    decreasing = all(later < earlier for earlier, later in zip(defects, defects[1:]))
    positive = all(ev.real > 0 for ev in eigenvalues)
    return {
        "skipped": False,
        "meshes": meshes,
        "hermitian_defects": defects,
        "min_eigenvalues": eigenvalues,
        "defect_decreasing": decreasing,
        "positive": positive,
        "passed": decreasing and positive,
    }


def uniqueness_defect(context: RunContext, reference: np.ndarray) -> float:
    """Re-solve with a random edge relabelling; returns the relative coefficient change."""
    order = rng_for(context.seed).permutation(context.tree.edges)
    permuted = solve(context.tree, context.data, backend="sparse", order=order, check=False).coefficients
    return float(np.abs(permuted - reference).max() / max(1.0, np.abs(reference).max()))


class Command(BaseCommand):
    help = "Certificates, operator checks, a priori sweep and solver cross-checks"

    def handle(self, **options):
        context = prepare_run(options["config"], options["out"], options["seed"])
        section = context.config.verify
        backend = context.config.solve.backend
        tree, data = context.tree, context.data
        tol = settings.RESIDUAL_TOL

        trajectory = solve(tree, data, backend=backend, check=False)
        if section.corrupt_c2 is not None:
            trajectory = corrupt_trajectory(trajectory, delta=section.corrupt_c2)
        family = extract_controls(trajectory)
        checks: dict[str, dict] = {}

        checks["residuals"] = {**trajectory.diagnostics.as_dict(), "passed": trajectory.diagnostics.passed}
        checks["certificate"] = optimality_certificate(family, trials=section.trials, seed=context.seed).as_dict()

        balance = control_balance(family)
        checks["control_balance"] = {"defect": balance, "bound": tol, "passed": balance <= tol}
        checks["roundtrip"] = forward_integrate(family).as_dict()

        if len(tree.leaves) <= section.exhaustive_leaf_limit:
            exhaustive = playback_all(family)
            checks["playback_all"] = {
                **exhaustive.as_dict(),
                "passed": exhaustive.passed and exhaustive.energy_gap <= tol,
            }
        else:
            checks["playback_all"] = {"skipped": True, "passed": True, "leaves": len(tree.leaves)}

        checks["operator"] = operator_checks(context)
        apriori = apriori_ratio(tree, samples=section.apriori_samples, seed=context.seed, backend=backend)
        checks["apriori"] = {**apriori.as_dict(), "passed": apriori.stable}

        superposition = superposition_defect(tree, data, backend=backend, check=False)
        checks["superposition"] = {"defect": superposition, "bound": tol, "passed": superposition <= tol}
        backends = compare_backends(tree, data, check=False)
        checks["backends"] = {"difference": backends, "bound": tol, "passed": backends <= tol}
        uniqueness = uniqueness_defect(context, solve(tree, data, backend="sparse", check=False).coefficients)
        checks["uniqueness"] = {"difference": uniqueness, "bound": tol, "passed": uniqueness <= tol}

        failed = [name for name, check in checks.items() if not check["passed"]]
        passed = not failed
        self.track(write_yaml(context.out / "verify.yaml", {"passed": passed, "failed": failed, "checks": checks}))

        logger.bind(passed=passed, failed=failed, corrupted=section.corrupt_c2 is not None).info("cli.verify_finished")
        for name, check in checks.items():
            self.stdout.write(f"{name:<16}{'ok' if check['passed'] else 'FAILED'}")
        return self.finish(context, "verify", EXIT_OK if passed else EXIT_TOLERANCE)
