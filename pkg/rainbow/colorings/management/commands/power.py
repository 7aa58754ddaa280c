from django.conf import settings

from rainbow.colorings.construct import lex_power
from rainbow.colorings.formats import FORMATS
from rainbow.colorings.formats import MATRIX
from rainbow.colorings.formats import CertificateFile
from rainbow.colorings.formats import dumps
from rainbow.colorings.formats import format_for_path
from rainbow.colorings.models import Certificate
from rainbow.core.commands import RainbowCommand


class Command(RainbowCommand):
    help = "Write the k-th lexicographic power of a coloring."

    def add_arguments(self, parser):
        parser.add_argument("input", help="Base coloring (matrix or .json).")
        parser.add_argument("--k", type=int, required=True, help="Exponent, k >= 1.")
        parser.add_argument("--out", help="Output path (default: stdout).")
        parser.add_argument("--format", choices=FORMATS)
        parser.add_argument(
            "--cap",
            type=int,
            default=None,
            help="Largest vertex count allowed (default: RAINBOW_VERTEX_CAP).",
        )
        parser.add_argument(
            "--record",
            action="store_true",
            help="Also archive the result in the database.",
        )

    def handle(self, *args, **options):
        base = self.read_input(options["input"])
        cap = options["cap"]
        if cap is None:
            cap = settings.RAINBOW_VERTEX_CAP
        with self.domain_errors():
            power = lex_power(base.coloring, options["k"], vertex_cap=cap)

        meta = dict(base.meta)
        meta["construction"] = f"lexicographic power k={options['k']}"
        certificate = CertificateFile(coloring=power, q=base.q, meta=meta)
        fmt = options["format"]
        if fmt is None:
            fmt = format_for_path(options["out"]) if options["out"] else MATRIX
        self.emit(dumps(certificate, fmt), options["out"])

        if options["record"]:
            stored = Certificate.from_file(certificate, source="power")
            stored.save()
            self.stderr.write(f"archived certificate {stored.pk}")
