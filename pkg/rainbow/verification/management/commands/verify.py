import time

from django.conf import settings

from rainbow.colorings.models import Certificate
from rainbow.core.commands import RainbowCommand
from rainbow.verification.models import VerificationRun
from rainbow.verification.reports import CertificateVerdict
from rainbow.verification.services import verify_certificate
from rainbow.verification.tasks import execute_verification_run
from rainbow.verification.tasks import verify_certificate_task

EXHAUSTIVE = "exhaustive"
SAMPLE = "sample"


def _yes_no(flag: bool) -> str:  # noqa: FBT001
    return "yes" if flag else "no"


def render_verdict(verdict: CertificateVerdict, n: int, ell: int) -> str:
    report = verdict.report
    balance = _yes_no(verdict.balanced)
    if verdict.balanced:
        balance += f" (t = {verdict.uniform_t})"
    elif verdict.unbalanced_vertices:
        vertices = ", ".join(str(v) for v in verdict.unbalanced_vertices)
        balance += f" (unbalanced vertices: {vertices})"
    witness = report.witness.describe() if report.witness else "none"
    lines = [
        f"coloring: K_{n}, {ell} colors",
        f"balanced: {balance}",
        f"uniform_t: {verdict.uniform_t if verdict.uniform_t is not None else '-'}",
        f"rainbow_free: {_yes_no(verdict.rainbow_free)} (q = {verdict.clique_size})",
        f"mode: {report.describe_mode()}",
        f"subsets examined: {report.subsets_examined}",
    ]
    if report.pruned_prefixes:
        lines.append(f"pruned prefixes: {report.pruned_prefixes}")
    if report.decided_by_pigeonhole:
        lines.append("decided by pigeonhole: fewer colors than clique edges")
    lines.append(f"witness: {witness}")
    lines.append(f"verdict: {'ACCEPTED' if verdict.accepted else 'REJECTED'}")
    return "\n".join(lines) + "\n"


class Command(RainbowCommand):
    help = "Check that a coloring is balanced and has no rainbow K_q."

    def add_arguments(self, parser):
        parser.add_argument("input", help="Coloring (matrix or .json).")
        parser.add_argument(
            "--q",
            type=int,
            default=None,
            help="Clique size (default: the q stored in the certificate).",
        )
        parser.add_argument("--mode", choices=(EXHAUSTIVE, SAMPLE), default=EXHAUSTIVE)
        parser.add_argument("--samples", type=int, default=None)
        parser.add_argument("--seed", type=int, default=None)
        self.add_threads_argument(parser)
        self.add_record_arguments(parser)

    def handle(self, *args, **options):
        certificate = self.read_input(options["input"])
        coloring = certificate.coloring
        q = options["q"] if options["q"] is not None else certificate.q
        if q is None:
            self.usage_error("no --q given and the certificate does not store one")

        samples = seed = None
        if options["mode"] == SAMPLE:
            samples, seed = options["samples"], options["seed"]
            if samples is None or seed is None:
                self.usage_error("--mode sample needs both --samples and --seed")
        threads = self.threads(options)

        if options["record"] or options["enqueue"]:
            stored = Certificate.from_path(certificate, options["input"])
            stored.save()
            run = VerificationRun.objects.create(
                certificate=stored,
                q=q,
                mode="sampled" if samples is not None else "exhaustive",
                samples=samples,
                seed=seed,
            )
            if options["enqueue"]:
                verify_certificate_task.delay(run.pk, threads=threads)
                self.stdout.write(f"queued verification run {run.pk}")
                return
            verdict = execute_verification_run(run, threads=threads)
            if verdict is None:
                self.usage_error(run.error_message)
            self.stdout.write(f"run: {run.pk}")
        else:
            started = time.perf_counter()
            with self.domain_errors():
                verdict = verify_certificate(
                    coloring,
                    q,
                    threads=threads,
                    samples=samples,
                    seed=seed,
                    chunk=settings.RAINBOW_SAMPLE_CHUNK,
                )
            self.stderr.write(f"wall time: {time.perf_counter() - started:.3f}s")

        self.stdout.write(render_verdict(verdict, coloring.n, coloring.ell), ending="")
        if not verdict.accepted:
            self.violated("certificate rejected")
