"""
Errors raised by the Grinberg, walk, bounds and reduction computations.
"""

from core.exceptions import PlanarError


class TooFewFaces(PlanarError):
    """Fewer than two faces: no sign vector survives the exclusion rule."""


class InvalidFaceLengths(PlanarError):
    pass


class OddGrinbergNumber(PlanarError):
    """Grinberg values are always even; an odd one means a broken computation."""


class WalkSyntaxError(PlanarError):
    pass


class UnknownVertex(PlanarError):
    pass


class NonAdjacentStep(PlanarError):
    def __init__(self, index: int, u: int, v: int):
        self.index = index
        super().__init__(f"step {index}: vertices {u} and {v} share no edge")


class NotSpanning(PlanarError):
    def __init__(self, missing):
        self.missing = tuple(sorted(missing))
        super().__init__(f"walk misses vertices {list(self.missing)}")


class TooLarge(PlanarError):
    def __init__(self, n: int, limit: int):
        self.n = n
        self.limit = limit
        super().__init__(f"n={n} exceeds the limit {limit}; raise the limit explicitly")


class TooFewVertices(PlanarError):
    pass


class InconsistentBounds(PlanarError):
    pass


class NotSimpleHost(PlanarError):
    pass


class InvalidWalk(PlanarError):
    pass


class OddDualCycle(PlanarError):
    """The face classes of a reduction cannot be two-colored."""


class TheoremCheckFailed(PlanarError):
    """A reduction check that must hold for every valid walk came out false."""


class FaceSumTooLarge(PlanarError):
    def __init__(self, total: int, limit: int):
        self.total = total
        self.limit = limit
        super().__init__(f"sum of |F| - 2 is {total}, above the limit {limit}")
