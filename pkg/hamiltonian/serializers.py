"""
Report serializers shared by the ``planar`` command (``--json``) and the API.
"""

from rest_framework import serializers

from core.exceptions import PlanarError
from core.serializers import GraphInputSerializer

from .grinberg import repeat_lower_bound
from .walks import parse_walk


class GrinbergReportSerializer(serializers.Serializer):
    set = serializers.ListField(source="values", child=serializers.IntegerField())
    g = serializers.IntegerField()
    repeat_lower_bound = serializers.SerializerMethodField()

    def get_repeat_lower_bound(self, obj) -> int:
        return repeat_lower_bound(obj.g)


class BoundsReportSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    lower_grinberg = serializers.IntegerField()
    upper_elementary = serializers.IntegerField()
    upper_gh = serializers.IntegerField()
    upper_bermond = serializers.IntegerField()
    exact = serializers.IntegerField(allow_null=True)
    certified = serializers.BooleanField()
    certificate = serializers.CharField(allow_null=True)
    connectivity = serializers.IntegerField()
    diameter = serializers.IntegerField()
    bermond_c = serializers.IntegerField()
    gh_applicable = serializers.BooleanField()
    bermond_applicable = serializers.BooleanField()
    grinberg_number = serializers.IntegerField()
    grinberg_on_doubled = serializers.BooleanField()
    witness_length = serializers.IntegerField(allow_null=True)


class ReductionReportSerializer(serializers.Serializer):
    phi = serializers.IntegerField()
    sum_m = serializers.IntegerField()
    n_plus = serializers.IntegerField()
    n_minus = serializers.IntegerField()
    delta_abs = serializers.IntegerField()
    nu = serializers.IntegerField()
    pi = serializers.IntegerField()
    f = serializers.IntegerField()
    epsilon = serializers.ListField(child=serializers.IntegerField())
    constant_signs = serializers.BooleanField()
    checks = serializers.DictField(child=serializers.BooleanField())
    class_lengths = serializers.ListField(child=serializers.IntegerField())
    class_signs = serializers.ListField(child=serializers.IntegerField())
    two_gons = serializers.IntegerField()
    degrees = serializers.ListField(child=serializers.IntegerField())
    grinberg_set = serializers.ListField(child=serializers.IntegerField())
    grinberg_on_doubled = serializers.BooleanField()


class SolveSerializer(serializers.Serializer):
    h = serializers.IntegerField()
    ordering = serializers.ListField(source="ordering.vertices", child=serializers.IntegerField())
    walk = serializers.ListField(source="walk.vertices", child=serializers.IntegerField())


class SpectrumSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    spectrum = serializers.ListField(child=serializers.IntegerField())
    h = serializers.IntegerField()


class WalkStatsSerializer(serializers.Serializer):
    length = serializers.IntegerField()
    repeats = serializers.IntegerField()
    spanning = serializers.BooleanField()
    multiplicities = serializers.ListField(child=serializers.IntegerField())


# Request bodies


def _parse_walk_field(value: str):
    try:
        return parse_walk(value)
    except PlanarError as exc:
        raise serializers.ValidationError(f"{exc.name}: {exc}") from exc


class GrinbergRequestSerializer(GraphInputSerializer):
    face_lengths = serializers.ListField(
        child=serializers.IntegerField(), required=False, allow_empty=True
    )

    graph_required = False

    def validate(self, attrs):
        attrs = super().validate(attrs)
        has_graph = "source" in attrs or "graph" in attrs
        if has_graph == ("face_lengths" in attrs):
            raise serializers.ValidationError("give exactly one of a graph and 'face_lengths'")
        return attrs


class BoundsRequestSerializer(GraphInputSerializer):
    solve = serializers.BooleanField(required=False, default=False)
    limit = serializers.IntegerField(required=False, min_value=1)
    walk = serializers.CharField(required=False)

    def validate_walk(self, value):
        return _parse_walk_field(value)


class ReduceRequestSerializer(GraphInputSerializer):
    walk = serializers.CharField()
    outer_face = serializers.IntegerField(required=False, min_value=1)

    def validate_walk(self, value):
        return _parse_walk_field(value)
