from rainbow.core.commands import RainbowCommand
from rainbow.verification.embedding import count_rainbow_pattern
from rainbow.verification.embedding import find_rainbow_pattern
from rainbow.verification.patterns import PatternGraph

ABSENT = "absent"
PRESENT = "present"


class Command(RainbowCommand):
    help = (
        "Look for a rainbow copy of a small pattern: k<q>, c<m>, <a>k<b> "
        "or an edge list such as 1-2,2-3."
    )

    def add_arguments(self, parser):
        parser.add_argument("input", help="Coloring (matrix or .json).")
        parser.add_argument("pattern", help="Pattern, e.g. k4, c6, 2k3 or 1-2,2-3.")
        parser.add_argument(
            "--expect",
            choices=(ABSENT, PRESENT),
            default=ABSENT,
            help="Which outcome exits 0 (default: absent).",
        )
        parser.add_argument(
            "--count",
            action="store_true",
            help="Also count rainbow embeddings and copies.",
        )
        self.add_threads_argument(parser)

    def handle(self, *args, **options):
        certificate = self.read_input(options["input"])
        coloring = certificate.coloring
        threads = self.threads(options)
        with self.domain_errors():
            pattern = PatternGraph.parse(options["pattern"])
            report = find_rainbow_pattern(coloring, pattern, threads=threads)
            census = (
                count_rainbow_pattern(coloring, pattern, threads=threads)
                if options["count"]
                else None
            )

        lines = [
            f"coloring: K_{coloring.n}, {coloring.ell} colors",
            f"pattern: {pattern.name} "
            f"({pattern.m} vertices, {pattern.edge_count} edges)",
            f"found: {'yes' if report.found else 'no'}",
            f"embeddings examined: {report.subsets_examined}",
        ]
        if report.decided_by_pigeonhole:
            lines.append("decided by pigeonhole: fewer colors than pattern edges")
        if report.witness is not None:
            lines.append(f"witness: {report.witness.describe()}")
        if census is not None:
            lines.append(f"rainbow embeddings: {census.embeddings}")
            lines.append(f"automorphisms: {census.automorphisms}")
            lines.append(f"rainbow copies: {census.copies}")
        self.stdout.write("\n".join(lines) + "\n", ending="")

        wanted = options["expect"] == PRESENT
        if report.found != wanted:
            self.violated(
                f"rainbow {pattern.name} {'found' if report.found else 'not found'}",
            )
