"""
Domain errors for embedded planar graphs.

Every error the toolkit raises derives from ``PlanarError``; the management
command and the API report the class name together with the message.
"""


class PlanarError(Exception):
    """Base class of all domain errors."""

    @property
    def name(self) -> str:
        return type(self).__name__


class GraphFileSyntaxError(PlanarError):
    """A line of a graph file does not match the format."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DanglingDart(PlanarError):
    """An edge end is missing from its vertex rotation, or listed twice."""


class Disconnected(PlanarError):
    pass


class NonPlanarEmbedding(PlanarError):
    """Face tracing violates Euler's formula for the sphere."""


class LoopEdge(PlanarError):
    pass


class UnknownFixture(PlanarError):
    pass


class BadParams(PlanarError):
    """Fixture parameters are missing, malformed or out of range."""


class InputFileError(PlanarError):
    """A graph or walk file cannot be read."""
