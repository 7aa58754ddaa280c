import logging
import time

from celery import shared_task
from django.conf import settings

from rainbow.colorings.exceptions import ColoringError
from rainbow.verification.exceptions import VerificationError
from rainbow.verification.models import VerificationRun
from rainbow.verification.reports import CertificateVerdict
from rainbow.verification.services import verify_certificate

logger = logging.getLogger(__name__)


def execute_verification_run(
    run: VerificationRun,
    *,
    threads: int = 1,
) -> CertificateVerdict | None:
    """Run a stored verification and persist its outcome.

    Domain errors mark the run failed and return None.
    """
    run.status = "running"
    run.save(update_fields=["status", "updated_at"])
    started = time.perf_counter()
    try:
        verdict = verify_certificate(
            run.certificate.to_coloring(),
            run.q,
            threads=threads,
            samples=run.samples if run.mode == "sampled" else None,
            seed=run.seed,
            chunk=settings.RAINBOW_SAMPLE_CHUNK,
        )
    except (ColoringError, VerificationError, ValueError) as exc:
        logger.warning("Verification run %s failed: %s", run.pk, exc)
        run.record_failure(exc)
        return None
    run.record_verdict(verdict, time.perf_counter() - started)
    logger.info("Verification run %s finished: %s", run.pk, run.status)
    return verdict


@shared_task()
def verify_certificate_task(run_id, threads=1):
    """Execute a pending :class:`VerificationRun` in a worker."""
    try:
        run = VerificationRun.objects.select_related("certificate").get(id=run_id)
    except VerificationRun.DoesNotExist:
        logger.error("Verification run %s not found", run_id)
        return {"error": "Verification run not found"}
    execute_verification_run(run, threads=threads)
    return {"id": run.pk, "status": run.status}
