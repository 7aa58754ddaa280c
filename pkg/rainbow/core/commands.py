"""Shared plumbing for the management commands.

Exit codes: 0 when the property asked about holds, 1 when it is violated
(raised after the report has been written), 2 for usage, input and
configuration errors.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand
from django.core.management.base import CommandError

from rainbow.colorings.formats import CertificateFile
from rainbow.colorings.formats import read_certificate

logger = logging.getLogger(__name__)

EXIT_VIOLATED = 1
EXIT_USAGE = 2


class RainbowCommand(BaseCommand):
    def add_threads_argument(self, parser):
        parser.add_argument(
            "--threads",
            type=int,
            default=None,
            help="Worker processes (default: RAINBOW_THREADS).",
        )

    def add_record_arguments(self, parser):
        group = parser.add_mutually_exclusive_group()
        group.add_argument(
            "--record",
            action="store_true",
            help="Store the run in the database.",
        )
        group.add_argument(
            "--enqueue",
            action="store_true",
            help="Store a pending run and hand it to a Celery worker.",
        )

    def threads(self, options) -> int:
        threads = options.get("threads")
        if threads is None:
            return settings.RAINBOW_THREADS
        if threads < 1:
            self.usage_error(f"--threads must be at least 1, got {threads}")
        return threads

    def usage_error(self, message: str):
        raise CommandError(message, returncode=EXIT_USAGE)

    def violated(self, message: str):
        raise CommandError(message, returncode=EXIT_VIOLATED)

    @contextmanager
    def domain_errors(self) -> Iterator[None]:
        """Turn validation and I/O errors into exit code 2."""
        try:
            yield
        except (ValueError, OSError) as exc:
            logger.debug("Command failed", exc_info=True)
            raise CommandError(str(exc), returncode=EXIT_USAGE) from exc

    def read_input(self, path: str) -> CertificateFile:
        with self.domain_errors():
            return read_certificate(path)

    def emit(self, text: str, out: str | None) -> None:
        """Write ``text`` to ``out``, or to stdout when no path is given."""
        if out is None:
            self.stdout.write(text, ending="")
            return
        with self.domain_errors():
            Path(out).write_text(text, encoding="utf-8", newline="\n")
        logger.info("Wrote %s", out)
