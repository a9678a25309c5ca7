from rest_framework import serializers

from .embedding import parse_embedding, serialize_embedding
from .exceptions import PlanarError
from .models import StoredGraph


def _parse_source(value: str) -> str:
    try:
        parse_embedding(value)
    except PlanarError as exc:
        raise serializers.ValidationError(f"{exc.name}: {exc}") from exc
    return value


class StoredGraphSerializer(serializers.ModelSerializer):
    num_vertices = serializers.SerializerMethodField()
    num_edges = serializers.SerializerMethodField()
    face_lengths = serializers.SerializerMethodField()

    class Meta:
        model = StoredGraph
        fields = [
            "id",
            "name",
            "description",
            "source",
            "num_vertices",
            "num_edges",
            "face_lengths",
            "created_at",
        ]
        read_only_fields = ["id", "created_at"]

    def validate_source(self, value):
        return _parse_source(value)

    def get_num_vertices(self, obj) -> int:
        return obj.embedding.num_vertices

    def get_num_edges(self, obj) -> int:
        return obj.embedding.num_edges

    def get_face_lengths(self, obj) -> list[int]:
        return obj.face_lengths


class GraphInputSerializer(serializers.Serializer):
    """
    Request body carrying a graph file, inline (``source``) or by stored name
    (``graph``). Subclasses add per-endpoint options.
    """

    source = serializers.CharField(required=False, trim_whitespace=False)
    graph = serializers.SlugRelatedField(
        slug_field="name",
        queryset=StoredGraph.objects.all(),
        required=False,
    )

    graph_required = True

    def validate(self, attrs):
        given = ("source" in attrs) + ("graph" in attrs)
        if given > 1 or (self.graph_required and not given):
            raise serializers.ValidationError("give exactly one of 'source' and 'graph'")
        return attrs

    def has_graph(self) -> bool:
        return "source" in self.validated_data or "graph" in self.validated_data

    def embedding(self):
        if "graph" in self.validated_data:
            return self.validated_data["graph"].embedding
        return parse_embedding(self.validated_data["source"])


class FacesReportSerializer(serializers.Serializer):
    n = serializers.IntegerField(source="num_vertices")
    m = serializers.IntegerField(source="num_edges")
    faces = serializers.ListField(source="face_lengths", child=serializers.IntegerField())
    bridges = serializers.ListField(child=serializers.IntegerField())


class FixtureSerializer(serializers.Serializer):
    name = serializers.CharField()
    face_lengths = serializers.ListField(child=serializers.IntegerField())
    expected = serializers.DictField()
    provenance = serializers.DictField(child=serializers.CharField())
    source = serializers.SerializerMethodField()
    walks = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))

    def get_source(self, obj) -> str | None:
        if obj.embedding is None:
            return None
        return serialize_embedding(obj.embedding)
