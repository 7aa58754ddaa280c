from rainbow.colorings.certificates import CERTIFICATES
from rainbow.colorings.certificates import get_certificate
from rainbow.colorings.formats import FORMATS
from rainbow.colorings.formats import MATRIX
from rainbow.colorings.formats import CertificateFile
from rainbow.colorings.formats import dumps
from rainbow.colorings.formats import format_for_path
from rainbow.colorings.models import Certificate
from rainbow.core.commands import RainbowCommand


class Command(RainbowCommand):
    help = "Write an embedded certificate in matrix or JSON form."

    def add_arguments(self, parser):
        parser.add_argument(
            "name",
            help=f"Certificate name ({', '.join(sorted(CERTIFICATES))}).",
        )
        parser.add_argument("--out", help="Output path (default: stdout).")
        parser.add_argument(
            "--format",
            choices=FORMATS,
            help="Output format (default: from the --out extension, else matrix).",
        )
        parser.add_argument(
            "--record",
            action="store_true",
            help="Also archive the certificate in the database.",
        )

    def handle(self, *args, **options):
        with self.domain_errors():
            coloring, q = get_certificate(options["name"])
        certificate = CertificateFile(
            coloring=coloring,
            q=q,
            meta={"source": f"embedded certificate {options['name']}"},
        )
        fmt = options["format"]
        if fmt is None:
            fmt = format_for_path(options["out"]) if options["out"] else MATRIX
        self.emit(dumps(certificate, fmt), options["out"])

        if options["record"]:
            stored = Certificate.from_file(
                certificate,
                name=options["name"],
                source="embedded",
            )
            stored.save()
            self.stderr.write(f"archived certificate {stored.pk}")
