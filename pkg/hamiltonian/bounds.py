"""
Upper and lower bounds on the Hamiltonian number, checked against each other.

    elementary           n <= h <= 2(n - 1)
    Goodman-Hedetniemi   h <= 2(n - 1) - floor(k/2) (2d - 2)    k-connected, diameter d
    Bermond              h <= 2n - c    deg v + deg w >= c for non-adjacent v, w; c <= n
    Grinberg             h >= n + g/2
"""

import logging
from dataclasses import dataclass

from core.embedding import PlanarEmbedding
from core.metrics import diameter, vertex_connectivity

from .exceptions import InconsistentBounds, TooFewVertices
from .grinberg import grinberg_number, grinberg_set_for_walks, repeat_lower_bound
from .walks import ClosedWalk, hamiltonian_number_exact, validate_walk

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundsReport:
    n: int
    lower_elementary: int
    upper_elementary: int
    upper_gh: int
    connectivity: int
    diameter: int
    gh_applicable: bool  # k >= 2; otherwise upper_gh is the elementary bound
    upper_bermond: int
    bermond_c: int
    bermond_applicable: bool  # a non-adjacent pair exists; otherwise c is clamped to n
    lower_grinberg: int
    grinberg_number: int
    grinberg_on_doubled: bool
    witness_length: int | None
    exact: int | None
    certified: bool
    certificate: str | None  # "solver", "bounds" or "witness"

    @property
    def lower(self) -> int:
        return max(self.lower_elementary, self.lower_grinberg)

    @property
    def upper(self) -> int:
        uppers = [self.upper_elementary, self.upper_gh, self.upper_bermond]
        if self.witness_length is not None:
            uppers.append(self.witness_length)
        return min(uppers)


def _require_order(g: PlanarEmbedding) -> None:
    if g.num_vertices < 3:
        raise TooFewVertices(f"bounds need n >= 3, got n={g.num_vertices}")


def goodman_hedetniemi_bound(g: PlanarEmbedding) -> int:
    _require_order(g)
    k = vertex_connectivity(g)
    d = diameter(g)
    return 2 * (g.num_vertices - 1) - (k // 2) * (2 * d - 2)


def _non_adjacent_degree_sums(g: PlanarEmbedding) -> list[int]:
    graph = g.simple_graph()
    return [
        graph.degree(v) + graph.degree(w)
        for v in graph
        for w in graph
        if v < w and not graph.has_edge(v, w)
    ]


def bermond_c(g: PlanarEmbedding) -> int:
    """Smallest degree sum over non-adjacent pairs, clamped to n."""
    return min([g.num_vertices, *_non_adjacent_degree_sums(g)])


def bermond_bound(g: PlanarEmbedding) -> int:
    _require_order(g)
    return 2 * g.num_vertices - bermond_c(g)


def bounds_report(
    g: PlanarEmbedding,
    solve: bool = False,
    limit: int | None = None,
    witness: ClosedWalk | None = None,
) -> BoundsReport:
    """
    Every applicable bound, plus h when it can be established.

    h is exact when the solver ran, when the Grinberg lower bound meets the
    smallest upper bound, or when a witness walk reaches the lower bound.
    """
    _require_order(g)
    n = g.num_vertices
    k = vertex_connectivity(g)
    d = diameter(g)
    degree_sums = _non_adjacent_degree_sums(g)
    c = min([n, *degree_sums])
    s, doubled = grinberg_set_for_walks(g)
    g_num = grinberg_number(s)
    lower_grinberg = n + repeat_lower_bound(g_num)

    witness_length = None
    if witness is not None:
        stats = validate_walk(g, witness)
        witness_length = stats.length

    exact, certificate = None, None
    if solve:
        exact, certificate = hamiltonian_number_exact(g, limit=limit).h, "solver"
    uppers = [2 * (n - 1), 2 * (n - 1) - (k // 2) * (2 * d - 2), 2 * n - c]
    if exact is None and lower_grinberg == min(uppers):
        exact, certificate = lower_grinberg, "bounds"
    if exact is None and witness_length == lower_grinberg:
        exact, certificate = lower_grinberg, "witness"

    report = BoundsReport(
        n=n,
        lower_elementary=n,
        upper_elementary=uppers[0],
        upper_gh=uppers[1],
        connectivity=k,
        diameter=d,
        gh_applicable=k >= 2,
        upper_bermond=uppers[2],
        bermond_c=c,
        bermond_applicable=bool(degree_sums),
        lower_grinberg=lower_grinberg,
        grinberg_number=g_num,
        grinberg_on_doubled=doubled,
        witness_length=witness_length,
        exact=exact,
        certified=exact is not None,
        certificate=certificate,
    )
    if report.lower > report.upper:
        raise InconsistentBounds(f"lower bound {report.lower} exceeds upper bound {report.upper}")
    if exact is not None and not report.lower <= exact <= report.upper:
        raise InconsistentBounds(f"h={exact} outside [{report.lower}, {report.upper}]")
    logger.debug("bounds for n=%d: [%d, %d], exact=%s", n, report.lower, report.upper, exact)
    return report
