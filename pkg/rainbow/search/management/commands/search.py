import time

from django.conf import settings

from rainbow.colorings.formats import FORMATS
from rainbow.colorings.formats import MATRIX
from rainbow.colorings.formats import CertificateFile
from rainbow.colorings.formats import dumps
from rainbow.colorings.formats import format_for_path
from rainbow.colorings.models import Certificate
from rainbow.core.commands import RainbowCommand
from rainbow.search.config import SearchConfig
from rainbow.search.config import SearchStatus
from rainbow.search.config import Strategy
from rainbow.search.models import SearchRun
from rainbow.search.outcome import SearchOutcome
from rainbow.search.services import run_search
from rainbow.search.tasks import execute_search_run
from rainbow.search.tasks import run_search_task


def render_outcome(outcome: SearchOutcome) -> str:
    config, stats = outcome.config, outcome.stats
    winner = "-" if stats.winning_restart is None else stats.winning_restart
    best = "-" if stats.best_objective is None else stats.best_objective
    lines = [
        f"instance: K_{config.n}, {config.ell} colors, q = {config.q}",
        f"strategy: {config.strategy} (seed {config.seed})",
        f"repair: {'yes' if config.initial is not None else 'no'}",
        f"status: {outcome.status}",
        f"restarts used: {stats.restarts_used}",
        f"winning restart: {winner}",
        f"steps used: {stats.steps_used}",
        f"moves evaluated: {stats.moves_evaluated}",
        f"best objective: {best}",
    ]
    return "\n".join(lines) + "\n"


class Command(RainbowCommand):
    help = "Search for a balanced ell-coloring of K_n with no rainbow K_q."

    def add_arguments(self, parser):
        parser.add_argument("n", type=int, help="Vertex count.")
        parser.add_argument("ell", type=int, help="Color count; must divide n - 1.")
        parser.add_argument("--q", type=int, required=True, help="Clique size.")
        parser.add_argument(
            "--strategy",
            choices=[s.value for s in Strategy],
            default=Strategy.LOCAL_SEARCH.value,
        )
        parser.add_argument(
            "--seed",
            type=int,
            default=None,
            help="Master seed; required for local search.",
        )
        parser.add_argument("--max-restarts", type=int, default=None)
        parser.add_argument(
            "--max-steps",
            type=int,
            default=None,
            help="Accepted moves per restart, or nodes for backtracking.",
        )
        parser.add_argument(
            "--plateau",
            type=int,
            default=None,
            help="Sideways moves allowed in a row.",
        )
        parser.add_argument(
            "--repair",
            help="Coloring to repair instead of starting cold.",
        )
        parser.add_argument("--out", help="Where to write a found coloring.")
        parser.add_argument("--format", choices=FORMATS)
        self.add_threads_argument(parser)
        self.add_record_arguments(parser)

    def handle(self, *args, **options):
        strategy = Strategy(options["strategy"])
        seed = options["seed"]
        if seed is None:
            if strategy == Strategy.LOCAL_SEARCH:
                self.usage_error("local search needs an explicit --seed")
            seed = 0
        repair = self.read_input(options["repair"]) if options["repair"] else None

        with self.domain_errors():
            config = SearchConfig(
                n=options["n"],
                ell=options["ell"],
                q=options["q"],
                strategy=strategy,
                seed=seed,
                max_restarts=self._budget(options, "max_restarts"),
                max_steps_per_restart=self._budget(options, "max_steps"),
                plateau=self._budget(options, "plateau"),
                initial=repair.coloring if repair else None,
            )
        threads = self.threads(options)

        if options["record"] or options["enqueue"]:
            run = SearchRun.from_config(config)
            if repair is not None:
                stored = Certificate.from_path(repair, options["repair"])
                stored.save()
                run.initial = stored
            run.save()
            if options["enqueue"]:
                run_search_task.delay(run.pk, threads=threads)
                self.stdout.write(f"queued search run {run.pk}")
                return
            outcome = execute_search_run(run, threads=threads)
            if outcome is None:
                self.usage_error(run.error_message)
            self.stdout.write(f"run: {run.pk}")
        else:
            started = time.perf_counter()
            with self.domain_errors():
                outcome = run_search(config, threads=threads)
            self.stderr.write(f"wall time: {time.perf_counter() - started:.3f}s")

        self.stdout.write(render_outcome(outcome), ending="")
        if outcome.status == SearchStatus.TRIVIAL_INSTANCE:
            self.usage_error(
                f"trivial instance: K_{config.q} has more edges than "
                f"{config.ell} colors",
            )
        if outcome.coloring is None:
            self.violated(f"no coloring found ({outcome.status})")

        certificate = CertificateFile(
            coloring=outcome.coloring,
            q=config.q,
            meta={
                "source": "computer search",
                "strategy": str(config.strategy),
                "seed": str(config.seed),
                "winning_restart": str(outcome.stats.winning_restart),
            },
        )
        out = options["out"]
        fmt = options["format"] or (format_for_path(out) if out else MATRIX)
        self.emit(dumps(certificate, fmt), out)

    def _budget(self, options, name):
        value = options[name]
        if value is not None:
            return value
        defaults = {
            "max_restarts": settings.RAINBOW_SEARCH_MAX_RESTARTS,
            "max_steps": settings.RAINBOW_SEARCH_MAX_STEPS,
            "plateau": settings.RAINBOW_SEARCH_PLATEAU,
        }
        return defaults[name]
