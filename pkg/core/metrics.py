"""
Distance, connectivity and bridge metrics of an embedded graph.

These only look at the abstract graph; the rotation system is ignored.
"""

from dataclasses import dataclass

import networkx as nx
import numpy as np

from .embedding import PlanarEmbedding, trace_faces


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Hop distances; row/column ``v - 1`` belongs to vertex ``v``."""

    matrix: np.ndarray

    @property
    def size(self) -> int:
        return self.matrix.shape[0]

    def distance(self, u: int, v: int) -> int:
        return int(self.matrix[u - 1, v - 1])

    def diameter(self) -> int:
        return int(self.matrix.max()) if self.size else 0


def shortest_path_matrix(g: PlanarEmbedding) -> DistanceMatrix:
    n = g.num_vertices
    matrix = np.zeros((n, n), dtype=np.int64)
    for source, lengths in nx.all_pairs_shortest_path_length(g.simple_graph()):
        for target, hops in lengths.items():
            matrix[source - 1, target - 1] = hops
    matrix.setflags(write=False)
    return DistanceMatrix(matrix)


def diameter(g: PlanarEmbedding) -> int:
    return shortest_path_matrix(g).diameter()


def vertex_connectivity(g: PlanarEmbedding) -> int:
    """
    Largest k such that g is k-connected.

    networkx computes the minimum number of internally disjoint paths with
    unit-capacity flows on the vertex-split network; K_n gives n - 1.
    """
    if g.num_vertices < 2:
        return 0
    return nx.node_connectivity(g.simple_graph())


def bridges(g: PlanarEmbedding) -> frozenset[int]:
    """Ids of the edges whose removal disconnects g (parallel edges never qualify)."""
    multigraph = g.to_networkx()
    found = set()
    for u, v in nx.bridges(multigraph):
        (edge_id,) = multigraph[u][v]
        found.add(edge_id)
    return frozenset(found)


@dataclass(frozen=True)
class FaceSummary:
    num_vertices: int
    num_edges: int
    face_lengths: tuple[int, ...]  # face id - 1 -> boundary length
    bridges: tuple[int, ...]


def face_summary(g: PlanarEmbedding) -> FaceSummary:
    return FaceSummary(
        num_vertices=g.num_vertices,
        num_edges=g.num_edges,
        face_lengths=tuple(trace_faces(g).lengths()),
        bridges=tuple(sorted(bridges(g))),
    )
