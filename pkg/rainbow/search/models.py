from django.db import models
from django.utils.translation import gettext_lazy as _

from rainbow.colorings.models import Certificate
from rainbow.search.config import SearchConfig
from rainbow.search.outcome import SearchOutcome


class SearchRun(models.Model):
    """One budgeted search for a balanced rainbow-K_q-free coloring."""

    STRATEGY_CHOICES = [
        ("local_search", _("Local search")),
        ("backtracking", _("Backtracking")),
    ]

    STATUS_CHOICES = [
        ("pending", _("Pending")),
        ("running", _("Running")),
        ("found", _("Found")),
        ("exhausted", _("Exhausted")),
        ("exhausted_budget", _("Budget exhausted")),
        ("trivial_instance", _("Trivial instance")),
        ("failed", _("Failed")),
    ]

    n = models.PositiveIntegerField(_("Vertices"))
    ell = models.PositiveIntegerField(_("Colors"))
    q = models.PositiveIntegerField(_("Clique size"))
    strategy = models.CharField(
        _("Strategy"),
        max_length=20,
        choices=STRATEGY_CHOICES,
        default="local_search",
    )
    seed = models.PositiveBigIntegerField(_("Seed"), default=0)
    config = models.JSONField(_("Configuration"))

    initial = models.ForeignKey(
        "colorings.Certificate",
        on_delete=models.SET_NULL,
        null=True,
        blank=True,
        related_name="repair_runs",
    )
    result = models.ForeignKey(
        "colorings.Certificate",
        on_delete=models.SET_NULL,
        null=True,
        blank=True,
        related_name="found_by",
    )

    status = models.CharField(
        _("Status"),
        max_length=20,
        choices=STATUS_CHOICES,
        default="pending",
    )
    stats = models.JSONField(_("Statistics"), default=dict, blank=True)
    error_message = models.TextField(_("Error Message"), blank=True)

    created_at = models.DateTimeField(auto_now_add=True)
    updated_at = models.DateTimeField(auto_now=True)

    class Meta:
        verbose_name = _("Search Run")
        verbose_name_plural = _("Search Runs")
        ordering = ["-created_at"]

    def __str__(self):
        return (
            f"K_{self.n} ell={self.ell} q={self.q} {self.strategy} "
            f"[{self.get_status_display()}]"
        )

    @classmethod
    def from_config(cls, config: SearchConfig, **fields) -> "SearchRun":
        data = config.to_dict()
        data.pop("initial", None)
        return cls(
            n=config.n,
            ell=config.ell,
            q=config.q,
            strategy=str(config.strategy),
            seed=config.seed,
            config=data,
            **fields,
        )

    def to_config(self) -> SearchConfig:
        data = dict(self.config)
        initial = self.initial.to_coloring() if self.initial else None
        return SearchConfig(initial=initial, **data)

    def record_outcome(self, outcome: SearchOutcome) -> None:
        self.status = str(outcome.status)
        self.stats = outcome.stats.to_dict()
        if outcome.coloring is not None:
            found = Certificate.from_coloring(
                outcome.coloring,
                q=outcome.config.q,
                source="search",
                meta={
                    "strategy": str(outcome.config.strategy),
                    "seed": str(outcome.config.seed),
                    "winning_restart": str(outcome.stats.winning_restart),
                },
            )
            found.save()
            self.result = found
        self.error_message = ""
        self.save()

    def record_failure(self, error: Exception) -> None:
        self.status = "failed"
        self.error_message = str(error)
        self.save(update_fields=["status", "error_message", "updated_at"])
