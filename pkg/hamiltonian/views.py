from rest_framework.decorators import api_view
from rest_framework.response import Response

from core.exceptions import PlanarError
from core.views import planar_error_response

from .bounds import bounds_report
from .grinberg import grinberg_set, grinberg_set_of
from .reduction import reduction_report
from .serializers import (
    BoundsReportSerializer,
    BoundsRequestSerializer,
    GrinbergReportSerializer,
    GrinbergRequestSerializer,
    ReduceRequestSerializer,
    ReductionReportSerializer,
)


@api_view(["POST"])
def grinberg_view(request):
    """
    Grinberg set of a graph or of a literal face-length list.
    JSON body: source | graph | face_lengths
    """
    payload = GrinbergRequestSerializer(data=request.data)
    payload.is_valid(raise_exception=True)
    try:
        if payload.has_graph():
            s = grinberg_set_of(payload.embedding())
        else:
            s = grinberg_set(payload.validated_data["face_lengths"])
    except PlanarError as exc:
        return planar_error_response(exc)
    return Response(GrinbergReportSerializer(s).data)


@api_view(["POST"])
def bounds_view(request):
    """
    JSON body: source | graph, optional solve, limit and walk (walk file text)
    """
    payload = BoundsRequestSerializer(data=request.data)
    payload.is_valid(raise_exception=True)
    options = payload.validated_data
    try:
        report = bounds_report(
            payload.embedding(),
            solve=options["solve"],
            limit=options.get("limit"),
            witness=options.get("walk"),
        )
    except PlanarError as exc:
        return planar_error_response(exc)
    return Response(BoundsReportSerializer(report).data)


@api_view(["POST"])
def reduce_view(request):
    payload = ReduceRequestSerializer(data=request.data)
    payload.is_valid(raise_exception=True)
    try:
        report = reduction_report(
            payload.embedding(),
            payload.validated_data["walk"],
            outer_face=payload.validated_data.get("outer_face"),
        )
    except PlanarError as exc:
        return planar_error_response(exc)
    return Response(ReductionReportSerializer(report).data)
