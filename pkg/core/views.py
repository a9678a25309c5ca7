import logging

from rest_framework import status, viewsets
from rest_framework.decorators import api_view
from rest_framework.response import Response

from .exceptions import PlanarError
from .metrics import face_summary
from .models import StoredGraph
from .serializers import FacesReportSerializer, GraphInputSerializer, StoredGraphSerializer

logger = logging.getLogger(__name__)


def planar_error_response(exc: PlanarError) -> Response:
    """400 body shared by every endpoint that runs a computation."""
    logger.info("request rejected: %s: %s", exc.name, exc)
    return Response({"error": exc.name, "detail": str(exc)}, status=status.HTTP_400_BAD_REQUEST)


class StoredGraphViewSet(viewsets.ModelViewSet):
    queryset = StoredGraph.objects.all().order_by("name")
    serializer_class = StoredGraphSerializer


@api_view(["POST"])
def faces_view(request):
    """
    Face lengths and bridges of a graph file.
    JSON body: source (graph file text) or graph (stored graph name)
    """
    payload = GraphInputSerializer(data=request.data)
    payload.is_valid(raise_exception=True)
    try:
        summary = face_summary(payload.embedding())
    except PlanarError as exc:
        return planar_error_response(exc)
    return Response(FacesReportSerializer(summary).data)
