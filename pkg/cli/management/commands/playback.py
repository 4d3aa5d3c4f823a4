"""
Play the optimal policy back along one scenario path.
Path: cli/management/commands/playback.py

Usage:
    python manage.py playback --config run.yaml --out results/ [--seed N]

Branch choices come from ``playback.branch_choices`` or are sampled with the
run seed. Exit 2 when the terminal error exceeds the residual tolerance.
"""
from bvp.services import solve
from cli.base import BaseCommand
from cli.services import prepare_run
from config.logger import logger
from config.settings import settings
from control.schemas import PATH_COLUMNS
from control.services import extract_controls, path_from_choices, playback, sample_path
from errors import EXIT_OK, EXIT_TOLERANCE, E


class Command(BaseCommand):
    help = "Stitch the controls of one scenario path and check the terminal value"

    def handle(self, **options):
        context = prepare_run(options["config"], options["out"], options["seed"])
        section = context.config.playback
        tree = context.tree

        family = extract_controls(solve(tree, context.data, backend=context.config.solve.backend))
        if section.branch_choices is not None:
            path = path_from_choices(tree, section.branch_choices)
        else:
            path = sample_path(tree, context.seed)
        record = playback(family, path, samples_per_edge=section.samples_per_edge)
        self.write_table(context.out / "path.csv", PATH_COLUMNS, record.rows(), self.table_format(context, options))

        ok = record.terminal_ok(settings.RESIDUAL_TOL)
        line = (
            f"terminal_error={record.terminal_error:.17g} leaf={path.leaf} "
            f"choices={list(path.choices)} energy={record.energy:.17g} {'ok' if ok else 'FAILED'}"
        )
        terminal = context.out / "terminal.txt"
        terminal.write_text(line + "\n", encoding="utf-8")
        self.track(terminal)
        self.stdout.write(line)

        log = logger.bind(leaf=path.leaf, terminal_error=record.terminal_error, bound=settings.RESIDUAL_TOL * record.scale)
        if not ok:
            log.bind(code=E.CONTROL__TERMINAL_BREACH).warning("control.terminal_breach")
        return self.finish(context, "playback", EXIT_OK if ok else EXIT_TOLERANCE)
