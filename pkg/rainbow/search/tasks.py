import logging

from celery import shared_task

from rainbow.search.exceptions import SearchError
from rainbow.search.models import SearchRun
from rainbow.search.outcome import SearchOutcome
from rainbow.search.services import run_search

logger = logging.getLogger(__name__)


def execute_search_run(run: SearchRun, *, threads: int = 1) -> SearchOutcome | None:
    """Run a stored search and persist its outcome; failures return None."""
    run.status = "running"
    run.save(update_fields=["status", "updated_at"])
    try:
        outcome = run_search(run.to_config(), threads=threads)
    except (ValueError, SearchError) as exc:
        logger.exception("Search run %s failed", run.pk)
        run.record_failure(exc)
        return None
    run.record_outcome(outcome)
    logger.info("Search run %s finished: %s", run.pk, run.status)
    return outcome


@shared_task()
def run_search_task(run_id, threads=1):
    """Execute a pending :class:`SearchRun` in a worker."""
    try:
        run = SearchRun.objects.select_related("initial").get(id=run_id)
    except SearchRun.DoesNotExist:
        logger.error("Search run %s not found", run_id)
        return {"error": "Search run not found"}
    execute_search_run(run, threads=threads)
    return {"id": run.pk, "status": run.status}
