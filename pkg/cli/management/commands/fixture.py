"""
Generate an oracle fixture for the configured instance.
Path: cli/management/commands/fixture.py

Usage:
    python manage.py fixture --config run.yaml --out fixtures/

Runs the discretized QP over ``oracle.meshes``, extrapolates J and writes
fixture.yaml keyed by the instance hash.
"""
from cli.base import BaseCommand
from cli.services import prepare_run
from errors import EXIT_OK
from oracle.services import fixture_payload, qp_ladder, write_fixture


class Command(BaseCommand):
    help = "Write a QP-oracle fixture (extrapolated J and sample values)"

    def handle(self, **options):
        context = prepare_run(options["config"], options["out"], options["seed"])
        ladder = qp_ladder(context.tree, context.data, context.config.oracle.meshes)
        payload = fixture_payload(ladder, context.instance_hash, seed=context.seed)
        path = self.track(write_fixture(context.out / "fixture.yaml", payload))
        self.stdout.write(f"J_h = {list(ladder.energies)}")
        self.stdout.write(f"extrapolated J = {ladder.extrapolated:.17g}")
        self.stdout.write(f"fixture: {path}")
        return self.finish(context, "fixture", EXIT_OK)
