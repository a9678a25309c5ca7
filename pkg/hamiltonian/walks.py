"""
Closed spanning walks: validation, exact Hamiltonian numbers and spectra.

The Hamiltonian number h(G) is the length of a shortest closed spanning walk.
It equals the cheapest cyclic ordering of the vertices under shortest-path
distance, so the exact solver runs a subset dynamic program on the metric
closure and then expands each leg of the best ordering into a shortest path.

Walk file format: a single line ``w <L> <v_1> ... <v_L>``; the step back from
v_L to v_1 is implicit.
"""

import itertools
import logging
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass
from typing import NamedTuple

import networkx as nx
import numpy as np
from django.conf import settings

from core.embedding import PlanarEmbedding
from core.metrics import shortest_path_matrix

from .exceptions import (
    InvalidWalk,
    NonAdjacentStep,
    NotSpanning,
    TooLarge,
    UnknownVertex,
    WalkSyntaxError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClosedWalk:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        """Edge traversals; the one-vertex walk traverses nothing."""
        return len(self.vertices) if len(self.vertices) > 1 else 0

    def steps(self):
        """Yield (index, u, v) for every traversal, closing step included."""
        if len(self.vertices) < 2:
            return
        for index, u in enumerate(self.vertices):
            yield index, u, self.vertices[(index + 1) % len(self.vertices)]


@dataclass(frozen=True)
class WalkStats:
    length: int
    multiplicities: tuple[int, ...]  # m_v at index v - 1
    spanning: bool

    @property
    def repeats(self) -> int:
        return sum(self.multiplicities)


@dataclass(frozen=True)
class CyclicOrdering:
    vertices: tuple[int, ...]
    cost: int


class SolvedWalk(NamedTuple):
    h: int
    ordering: CyclicOrdering
    walk: ClosedWalk


def parse_walk(text: str) -> ClosedWalk:
    lines = [line.split("#", 1)[0].split() for line in text.splitlines()]
    lines = [tokens for tokens in lines if tokens]
    if len(lines) != 1 or lines[0][0] != "w":
        raise WalkSyntaxError("expected exactly one line 'w <L> <v_1> ... <v_L>'")
    try:
        length, *vertices = (int(token) for token in lines[0][1:])
    except ValueError:
        raise WalkSyntaxError("walk entries must be integers") from None
    if length != len(vertices) or not vertices:
        raise WalkSyntaxError(f"walk announces {length} vertices, lists {len(vertices)}")
    return ClosedWalk(tuple(vertices))


def serialize_walk(walk: ClosedWalk) -> str:
    return f"w {len(walk.vertices)} " + " ".join(map(str, walk.vertices)) + "\n"


def validate_walk(
    g: PlanarEmbedding,
    seq: Sequence[int] | ClosedWalk,
    require_spanning: bool = True,
) -> WalkStats:
    walk = seq if isinstance(seq, ClosedWalk) else ClosedWalk(tuple(seq))
    if not walk.vertices:
        raise InvalidWalk("empty walk")
    unknown = sorted({v for v in walk.vertices if not 1 <= v <= g.num_vertices})
    if unknown:
        raise UnknownVertex(f"vertices {unknown} are not in 1..{g.num_vertices}")

    graph = g.simple_graph()
    for index, u, v in walk.steps():
        if not graph.has_edge(u, v):
            raise NonAdjacentStep(index, u, v)

    occurrences = Counter(walk.vertices)
    missing = [v for v in g.vertices() if v not in occurrences]
    if missing and require_spanning:
        raise NotSpanning(missing)
    multiplicities = tuple(max(occurrences[v] - 1, 0) for v in g.vertices())
    return WalkStats(walk.length, multiplicities, not missing)


def walk_edge_traversals(g: PlanarEmbedding, walk: ClosedWalk) -> Counter:
    """Traversals per edge id; a step over parallel edges uses the lowest id."""
    counts = Counter()
    for index, u, v in walk.steps():
        candidates = g.edges_between(u, v)
        if not candidates:
            raise NonAdjacentStep(index, u, v)
        counts[candidates[0]] += 1
    return counts


def _cheapest_ordering(dist: np.ndarray) -> tuple[int, list[int]]:
    """
    Held-Karp over the metric closure, starting at index 0.

    ``remaining[mask, j]``: cheapest way to finish from j when index 0 and the
    indices in ``mask`` (bit i - 1 for index i) are visited, returning to 0.
    Layers are filled from the full mask down; the forward pass then takes
    the smallest next index that stays optimal.
    """
    n = dist.shape[0]
    k = n - 1
    full = (1 << k) - 1
    masks = np.arange(1 << k, dtype=np.int64)
    popcount = np.zeros(1 << k, dtype=np.int64)
    for bit in range(k):
        popcount += (masks >> bit) & 1

    dist = dist.astype(np.int32)
    unreached = np.int32(1 << 30)
    remaining = np.full((1 << k, n), unreached, dtype=np.int32)
    remaining[full, :] = dist[:, 0]
    for size in range(k - 1, -1, -1):
        layer = masks[popcount == size]
        for index in range(1, n):
            bit = 1 << (index - 1)
            open_masks = layer[(layer & bit) == 0]
            if not open_masks.size:
                continue
            onward = remaining[open_masks | bit, index]
            candidate = dist[:, index][np.newaxis, :] + onward[:, np.newaxis]
            remaining[open_masks] = np.minimum(remaining[open_masks], candidate)

    order, mask, current = [0], 0, 0
    while mask != full:
        for index in range(1, n):
            bit = 1 << (index - 1)
            if mask & bit:
                continue
            if dist[current, index] + remaining[mask | bit, index] == remaining[mask, current]:
                break
        order.append(index)
        mask |= bit
        current = index
    return int(remaining[0, 0]), order


def _shortest_leg(graph: nx.Graph, dist: np.ndarray, source: int, target: int) -> list[int]:
    path = [source]
    current = source
    while current != target:
        closer = dist[current - 1, target - 1] - 1
        current = min(w for w in graph[current] if dist[w - 1, target - 1] == closer)
        path.append(current)
    return path


def expand_ordering(g: PlanarEmbedding, ordering: Sequence[int]) -> ClosedWalk:
    """Closed walk following the ordering, each leg a shortest path."""
    if len(ordering) < 2:
        return ClosedWalk(tuple(ordering))
    graph = g.simple_graph()
    dist = shortest_path_matrix(g).matrix
    vertices: list[int] = []
    for u, v in zip(ordering, [*ordering[1:], ordering[0]]):
        vertices += _shortest_leg(graph, dist, u, v)[:-1]
    return ClosedWalk(tuple(vertices))


def hamiltonian_number_exact(g: PlanarEmbedding, limit: int | None = None) -> SolvedWalk:
    limit = settings.PLANAR_SOLVE_LIMIT if limit is None else limit
    n = g.num_vertices
    if n > limit:
        raise TooLarge(n, limit)
    if n == 1:
        logger.warning("h is undefined for the one-vertex graph; reporting 0")
        return SolvedWalk(0, CyclicOrdering((1,), 0), ClosedWalk((1,)))

    logger.debug("solving h for n=%d (%d subset states)", n, 1 << (n - 1))
    dist = shortest_path_matrix(g).matrix
    h, order = _cheapest_ordering(dist)
    ordering = CyclicOrdering(tuple(index + 1 for index in order), h)
    walk = expand_ordering(g, ordering.vertices)
    logger.debug("h=%d via ordering %s", h, ordering.vertices)
    return SolvedWalk(h, ordering, walk)


def hamiltonian_spectrum(g: PlanarEmbedding, limit: int | None = None) -> list[int]:
    """
    Distinct costs of all cyclic orderings.

    Vertex 1 is fixed first and reflections are skipped; rotating or
    reversing an ordering does not change its cost.
    """
    limit = settings.PLANAR_SPECTRUM_LIMIT if limit is None else limit
    n = g.num_vertices
    if n > limit:
        raise TooLarge(n, limit)
    if n == 1:
        return [0]
    dist = shortest_path_matrix(g).matrix
    tails = [
        perm
        for perm in itertools.permutations(range(1, n))
        if len(perm) < 2 or perm[0] < perm[-1]
    ]
    tours = np.hstack([np.zeros((len(tails), 1), dtype=np.int64), np.array(tails)])
    costs = dist[tours, np.roll(tours, -1, axis=1)].sum(axis=1)
    return [int(cost) for cost in np.unique(costs)]


def spanning_tree_walk(g: PlanarEmbedding) -> ClosedWalk:
    """Depth-first walk around a spanning tree: length 2(n - 1)."""
    if g.num_vertices == 1:
        return ClosedWalk((1,))
    vertices = [1]
    for u, v, kind in nx.dfs_labeled_edges(g.simple_graph(), source=1):
        if u == v:
            continue
        if kind == "forward":
            vertices.append(v)
        elif kind == "reverse":
            vertices.append(u)
    # the last step returns to the root, which the closure already covers
    return ClosedWalk(tuple(vertices[:-1]))
