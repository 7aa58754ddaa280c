from rainbow.colorings.export import DOT
from rainbow.colorings.export import EXPORT_FORMATS
from rainbow.colorings.export import export
from rainbow.core.commands import RainbowCommand


class Command(RainbowCommand):
    help = "Draw a coloring as a DOT graph or a standalone TikZ document."

    def add_arguments(self, parser):
        parser.add_argument("input", help="Coloring (matrix or .json).")
        parser.add_argument("--format", choices=EXPORT_FORMATS, default=DOT)
        parser.add_argument("--out", help="Output path (default: stdout).")

    def handle(self, *args, **options):
        certificate = self.read_input(options["input"])
        with self.domain_errors():
            text = export(certificate.coloring, options["format"])
        self.emit(text, options["out"])
