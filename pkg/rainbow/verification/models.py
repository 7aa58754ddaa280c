from django.db import models
from django.utils.translation import gettext_lazy as _

from rainbow.verification.reports import CertificateVerdict


class VerificationRun(models.Model):
    """One balance and rainbow-K_q check of an archived certificate."""

    MODE_CHOICES = [
        ("exhaustive", _("Exhaustive")),
        ("sampled", _("Sampled")),
    ]

    STATUS_CHOICES = [
        ("pending", _("Pending")),
        ("running", _("Running")),
        ("accepted", _("Accepted")),
        ("rejected", _("Rejected")),
        ("failed", _("Failed")),
    ]

    certificate = models.ForeignKey(
        "colorings.Certificate",
        on_delete=models.CASCADE,
        related_name="verification_runs",
    )
    q = models.PositiveIntegerField(_("Clique size"))
    mode = models.CharField(
        _("Mode"),
        max_length=20,
        choices=MODE_CHOICES,
        default="exhaustive",
    )
    samples = models.PositiveBigIntegerField(_("Samples"), null=True, blank=True)
    seed = models.PositiveBigIntegerField(_("Seed"), null=True, blank=True)

    status = models.CharField(
        _("Status"),
        max_length=20,
        choices=STATUS_CHOICES,
        default="pending",
    )
    balanced = models.BooleanField(_("Balanced"), null=True, blank=True)
    uniform_t = models.PositiveIntegerField(_("t"), null=True, blank=True)
    rainbow_free = models.BooleanField(_("Rainbow-free"), null=True, blank=True)
    subsets_examined = models.PositiveBigIntegerField(
        _("Subsets examined"),
        null=True,
        blank=True,
    )
    witness = models.JSONField(_("Witness"), null=True, blank=True)
    unbalanced_vertices = models.JSONField(default=list, blank=True)
    elapsed_seconds = models.FloatField(_("Wall time (s)"), null=True, blank=True)

    error_message = models.TextField(_("Error Message"), blank=True)

    created_at = models.DateTimeField(auto_now_add=True)
    updated_at = models.DateTimeField(auto_now=True)

    class Meta:
        verbose_name = _("Verification Run")
        verbose_name_plural = _("Verification Runs")
        ordering = ["-created_at"]

    def __str__(self):
        return f"{self.certificate} q={self.q} [{self.get_status_display()}]"

    def record_verdict(self, verdict: CertificateVerdict, elapsed: float) -> None:
        report = verdict.report
        self.status = "accepted" if verdict.accepted else "rejected"
        self.balanced = verdict.balanced
        self.uniform_t = verdict.uniform_t
        self.rainbow_free = verdict.rainbow_free
        self.subsets_examined = report.subsets_examined
        self.unbalanced_vertices = list(verdict.unbalanced_vertices)
        self.witness = None
        if report.witness is not None:
            self.witness = {
                "vertices": list(report.witness.vertices),
                "edges": [list(edge) for edge in report.witness.edges],
            }
        self.elapsed_seconds = elapsed
        self.error_message = ""
        self.save()

    def record_failure(self, error: Exception) -> None:
        self.status = "failed"
        self.error_message = str(error)
        self.save(update_fields=["status", "error_message", "updated_at"])
