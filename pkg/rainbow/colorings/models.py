from pathlib import Path

from django.db import models
from django.utils.translation import gettext_lazy as _

from rainbow.colorings.coloring import EdgeColoring
from rainbow.colorings.coloring import new_coloring
from rainbow.colorings.coloring import to_matrix
from rainbow.colorings.formats import CertificateFile


class Certificate(models.Model):
    """An archived coloring, optionally claimed free of rainbow K_q."""

    SOURCE_CHOICES = [
        ("embedded", _("Embedded certificate")),
        ("power", _("Lexicographic power")),
        ("search", _("Computer search")),
        ("file", _("Imported file")),
    ]

    name = models.CharField(_("Name"), max_length=100, blank=True)
    source = models.CharField(
        _("Source"),
        max_length=20,
        choices=SOURCE_CHOICES,
        default="file",
    )
    n = models.PositiveIntegerField(_("Vertices"))
    ell = models.PositiveIntegerField(_("Colors"))
    q = models.PositiveIntegerField(
        _("Clique size"),
        null=True,
        blank=True,
        help_text=_("Set when the coloring is claimed to have no rainbow K_q"),
    )
    matrix = models.JSONField(_("Matrix"))
    meta = models.JSONField(_("Provenance"), default=dict, blank=True)

    created_at = models.DateTimeField(auto_now_add=True)
    updated_at = models.DateTimeField(auto_now=True)

    class Meta:
        verbose_name = _("Certificate")
        verbose_name_plural = _("Certificates")
        ordering = ["-created_at"]

    def __str__(self):
        label = self.name or f"#{self.pk}"
        return f"{label} (K_{self.n}, {self.ell} colors)"

    @classmethod
    def from_coloring(cls, coloring: EdgeColoring, **fields) -> "Certificate":
        """Unsaved instance holding ``coloring``."""
        return cls(
            n=coloring.n,
            ell=coloring.ell,
            matrix=to_matrix(coloring).tolist(),
            **fields,
        )

    @classmethod
    def from_file(cls, certificate: CertificateFile, **fields) -> "Certificate":
        fields.setdefault("q", certificate.q)
        fields.setdefault("meta", dict(certificate.meta))
        return cls.from_coloring(certificate.coloring, **fields)

    @classmethod
    def from_path(cls, certificate: CertificateFile, path: str) -> "Certificate":
        """Unsaved import of the file at ``path``, named by its base name."""
        limit = cls._meta.get_field("name").max_length
        return cls.from_file(certificate, name=Path(path).name[:limit], source="file")

    def to_coloring(self) -> EdgeColoring:
        return new_coloring(self.n, self.ell, self.matrix)

    def to_file(self) -> CertificateFile:
        return CertificateFile(
            coloring=self.to_coloring(),
            q=self.q,
            meta=dict(self.meta),
        )
