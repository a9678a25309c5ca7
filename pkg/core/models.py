from django.core.exceptions import ValidationError
from django.db import models

from .embedding import PlanarEmbedding, parse_embedding, trace_faces
from .exceptions import PlanarError


class StoredGraph(models.Model):
    """
    A named embedded planar graph kept in the graph file format.
    - source: the full 'p planar' file; parsed on every access
    - seeded from the example corpus by `manage.py seed_corpus`
    """

    name = models.CharField(
        max_length=100,
        unique=True,
        help_text="Short identifier, e.g. grid(3,3)",
    )
    description = models.TextField(
        blank=True,
        default="",
        help_text="Where the graph comes from and what it illustrates",
    )
    source = models.TextField(
        help_text="Graph file content: 'p planar', 'e' and 'r' lines",
    )
    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ["name"]
        verbose_name = "Stored graph"
        verbose_name_plural = "Stored graphs"

    def __str__(self) -> str:
        return self.name

    def clean(self):
        try:
            parse_embedding(self.source)
        except PlanarError as exc:
            raise ValidationError({"source": f"{exc.name}: {exc}"}) from exc

    @property
    def embedding(self) -> PlanarEmbedding:
        return parse_embedding(self.source)

    @property
    def face_lengths(self) -> list[int]:
        return list(trace_faces(self.embedding).lengths())
