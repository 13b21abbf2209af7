"""
    Stored results of invariant computations.
"""

from django.core.validators import MinValueValidator
from django.db import models
from django.utils import timezone
from django.utils.translation import gettext_lazy as _

from kuperberg.hopf.integrals import HALFINT_CONVENTIONS

from .managers import InvariantRecordManager
from .utils import CustomBaseModel


class InvariantRecord(CustomBaseModel):
    algebra = models.CharField(_("Algebra"), max_length=100)
    diagram = models.CharField(_("Diagram"), max_length=100)
    degree_offset = models.IntegerField(_("Framing Degree Offset"), default=0)
    convention = models.CharField(
        _("Half-Integer Cointegral Convention"),
        max_length=20,
        choices=[(convention, convention) for convention in HALFINT_CONVENTIONS]
    )
    value = models.TextField(_("Exact Value"))
    field = models.CharField(_("Field"), max_length=50)
    max_intermediate = models.BigIntegerField(
        _("Max Intermediate Terms"),
        validators=[MinValueValidator(0, _("Term counts cannot be negative."))]
    )
    term_count = models.BigIntegerField(
        _("Term Count"),
        validators=[MinValueValidator(0, _("Term counts cannot be negative."))]
    )
    computed_at = models.DateTimeField(_("Computed At"), default=timezone.now)

    objects = InvariantRecordManager()

    class Meta:
        verbose_name = _("Invariant Record")
        constraints = [
            models.UniqueConstraint(
                fields=["algebra", "diagram", "degree_offset", "convention"],
                name="unique_invariant_per_algebra_diagram_degree_convention"
            )
        ]

    def __str__(self) -> str:
        return f"Z({self.diagram}, {self.algebra}; degree {self.degree_offset}) = {self.value}"
