"""
Embedded planar multigraphs given as rotation systems.

A dart is one end of one edge. Every vertex lists the darts leaving it in
counterclockwise order; faces are the orbits of "turn to the next dart
counterclockwise after arriving". Parallel edges are allowed, loops are not.

Graph file format (``#`` starts a comment)::

    p planar <n> <m>
    e <edge-id> <u> <v>
    r <v> <k> <edge-id> ... <edge-id>

Darts in an ``r`` line are plain edge ids bound to the end at that vertex.
"""

import logging
import math
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from .exceptions import (
    DanglingDart,
    Disconnected,
    GraphFileSyntaxError,
    LoopEdge,
    NonPlanarEmbedding,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Dart:
    edge: int
    end: int  # 0 = at edge.u, 1 = at edge.v

    def reverse(self) -> "Dart":
        return Dart(self.edge, 1 - self.end)


@dataclass(frozen=True)
class Edge:
    id: int
    u: int
    v: int

    def endpoint(self, end: int) -> int:
        return self.u if end == 0 else self.v

    def other(self, vertex: int) -> int:
        return self.v if vertex == self.u else self.u


@dataclass(frozen=True)
class PlanarEmbedding:
    """
    Connected planar multigraph on vertices 1..n with edge ids 1..m.

    Build through ``make_embedding`` or ``parse_embedding``; both check every
    invariant, including Euler's formula.
    """

    num_vertices: int
    edges: tuple[Edge, ...]
    rotations: tuple[tuple[Dart, ...], ...]  # index v - 1

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.num_vertices + 1)

    def edge(self, edge_id: int) -> Edge:
        return self.edges[edge_id - 1]

    def rotation(self, vertex: int) -> tuple[Dart, ...]:
        return self.rotations[vertex - 1]

    def degree(self, vertex: int) -> int:
        return len(self.rotations[vertex - 1])

    def tail(self, dart: Dart) -> int:
        return self.edge(dart.edge).endpoint(dart.end)

    def head(self, dart: Dart) -> int:
        return self.edge(dart.edge).endpoint(1 - dart.end)

    def darts(self) -> Iterator[Dart]:
        for edge in self.edges:
            yield Dart(edge.id, 0)
            yield Dart(edge.id, 1)

    @cached_property
    def _position(self) -> dict[Dart, int]:
        return {
            dart: index
            for rotation in self.rotations
            for index, dart in enumerate(rotation)
        }

    def next_in_face(self, dart: Dart) -> Dart:
        """Successor of ``dart`` along its face boundary."""
        back = dart.reverse()
        rotation = self.rotation(self.head(dart))
        return rotation[(self._position[back] + 1) % len(rotation)]

    def edges_between(self, u: int, v: int) -> list[int]:
        """Ids of the edges joining u and v, ascending."""
        return sorted(
            dart.edge for dart in self.rotation(u) if self.head(dart) == v
        )

    def has_parallel_edges(self) -> bool:
        pairs = [frozenset((e.u, e.v)) for e in self.edges]
        return len(pairs) != len(set(pairs))

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices())
        for edge in self.edges:
            graph.add_edge(edge.u, edge.v, key=edge.id)
        return graph

    def simple_graph(self) -> nx.Graph:
        """Underlying simple graph, neighbors inserted in ascending order."""
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices())
        pairs = sorted({tuple(sorted((e.u, e.v))) for e in self.edges})
        graph.add_edges_from(pairs)
        return graph


@dataclass(frozen=True)
class Face:
    id: int
    darts: tuple[Dart, ...]

    @property
    def length(self) -> int:
        return len(self.darts)


@dataclass(frozen=True)
class FaceSet:
    faces: tuple[Face, ...]

    def __len__(self) -> int:
        return len(self.faces)

    def __iter__(self) -> Iterator[Face]:
        return iter(self.faces)

    def __getitem__(self, face_id: int) -> Face:
        return self.faces[face_id - 1]

    def lengths(self) -> tuple[int, ...]:
        return tuple(face.length for face in self.faces)

    @cached_property
    def face_of(self) -> dict[Dart, int]:
        return {dart: face.id for face in self.faces for dart in face.darts}


def trace_faces(g: PlanarEmbedding) -> FaceSet:
    """
    Walk every face boundary once.

    From a dart arriving at w the boundary continues with the counterclockwise
    successor of the reversed dart at w. Faces are numbered in order of their
    smallest dart. The edgeless one-vertex graph has a single face of length 0.
    """
    if g.num_edges == 0:
        return FaceSet((Face(1, ()),))
    seen: set[Dart] = set()
    faces: list[Face] = []
    for start in g.darts():
        if start in seen:
            continue
        boundary = []
        dart = start
        while dart not in seen:
            seen.add(dart)
            boundary.append(dart)
            dart = g.next_in_face(dart)
        faces.append(Face(len(faces) + 1, tuple(boundary)))
    return FaceSet(tuple(faces))


def make_embedding(
    num_vertices: int,
    edges: Sequence[tuple[int, int]],
    rotations: Mapping[int, Sequence[Dart]],
) -> PlanarEmbedding:
    """
    Validate and freeze a rotation system.

    ``edges[i]`` is edge ``i + 1``; ``rotations`` maps a vertex to its
    counterclockwise darts (vertices of degree 0 may be omitted).
    """
    if num_vertices < 1:
        raise GraphFileSyntaxError("a graph needs at least one vertex")
    frozen_edges = []
    for edge_id, (u, v) in enumerate(edges, start=1):
        for vertex in (u, v):
            if not 1 <= vertex <= num_vertices:
                raise GraphFileSyntaxError(
                    f"edge {edge_id} names vertex {vertex} outside 1..{num_vertices}"
                )
        if u == v:
            raise LoopEdge(f"edge {edge_id} is a loop at vertex {u}")
        frozen_edges.append(Edge(edge_id, u, v))

    listed: set[Dart] = set()
    frozen_rotations = []
    for vertex in range(1, num_vertices + 1):
        rotation = tuple(rotations.get(vertex, ()))
        for dart in rotation:
            if not 1 <= dart.edge <= len(frozen_edges):
                raise DanglingDart(f"vertex {vertex} lists unknown edge {dart.edge}")
            if frozen_edges[dart.edge - 1].endpoint(dart.end) != vertex:
                raise DanglingDart(
                    f"edge {dart.edge} is not incident to vertex {vertex}"
                )
            if dart in listed:
                raise DanglingDart(
                    f"edge {dart.edge} appears twice in the rotation of vertex {vertex}"
                )
            listed.add(dart)
        frozen_rotations.append(rotation)
    for edge in frozen_edges:
        for end in (0, 1):
            if Dart(edge.id, end) not in listed:
                raise DanglingDart(
                    f"edge {edge.id} is missing from the rotation of vertex "
                    f"{edge.endpoint(end)}"
                )

    g = PlanarEmbedding(num_vertices, tuple(frozen_edges), tuple(frozen_rotations))
    if not nx.is_connected(g.to_networkx()):
        components = nx.number_connected_components(g.to_networkx())
        raise Disconnected(f"graph has {components} connected components")

    face_count = len(trace_faces(g))
    euler = g.num_vertices - g.num_edges + face_count
    if euler != 2:
        raise NonPlanarEmbedding(
            f"n - m + F = {g.num_vertices} - {g.num_edges} + {face_count} = {euler}, "
            "expected 2"
        )
    return g


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _ints(tokens: Iterable[str], lineno: int) -> list[int]:
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise GraphFileSyntaxError("expected integers", lineno) from None


def parse_embedding(text: str) -> PlanarEmbedding:
    header: tuple[int, int] | None = None
    edges: dict[int, tuple[int, int]] = {}
    raw_rotations: dict[int, tuple[list[int], int]] = {}

    for lineno, line in enumerate(text.splitlines(), start=1):
        content = _strip(line)
        if not content:
            continue
        tokens = content.split()
        kind = tokens[0]
        if header is None:
            if kind != "p" or len(tokens) != 4 or tokens[1] != "planar":
                raise GraphFileSyntaxError("expected header 'p planar <n> <m>'", lineno)
            n, m = _ints(tokens[2:], lineno)
            if n < 1 or m < 0:
                raise GraphFileSyntaxError("header needs n >= 1 and m >= 0", lineno)
            header = (n, m)
        elif kind == "p":
            raise GraphFileSyntaxError("duplicate header", lineno)
        elif kind == "e":
            if len(tokens) != 4:
                raise GraphFileSyntaxError("expected 'e <edge-id> <u> <v>'", lineno)
            edge_id, u, v = _ints(tokens[1:], lineno)
            if not 1 <= edge_id <= header[1]:
                raise GraphFileSyntaxError(f"edge id {edge_id} outside 1..{header[1]}", lineno)
            if edge_id in edges:
                raise GraphFileSyntaxError(f"edge {edge_id} defined twice", lineno)
            edges[edge_id] = (u, v)
        elif kind == "r":
            if len(tokens) < 3:
                raise GraphFileSyntaxError("expected 'r <v> <k> <darts...>'", lineno)
            vertex, k, *darts = _ints(tokens[1:], lineno)
            if len(darts) != k:
                raise GraphFileSyntaxError(
                    f"rotation of vertex {vertex} announces {k} darts, lists {len(darts)}",
                    lineno,
                )
            if not 1 <= vertex <= header[0]:
                raise GraphFileSyntaxError(f"vertex {vertex} outside 1..{header[0]}", lineno)
            if vertex in raw_rotations:
                raise GraphFileSyntaxError(f"rotation of vertex {vertex} given twice", lineno)
            raw_rotations[vertex] = (darts, lineno)
        else:
            raise GraphFileSyntaxError(f"unknown line type {kind!r}", lineno)

    if header is None:
        raise GraphFileSyntaxError("missing header 'p planar <n> <m>'")
    n, m = header
    if len(edges) != m:
        raise GraphFileSyntaxError(f"header announces {m} edges, file defines {len(edges)}")

    ordered = [edges[edge_id] for edge_id in range(1, m + 1)]
    rotations: dict[int, list[Dart]] = {}
    for vertex, (edge_ids, lineno) in raw_rotations.items():
        bound = []
        for edge_id in edge_ids:
            if edge_id not in edges:
                raise DanglingDart(f"line {lineno}: unknown edge {edge_id}")
            u, v = edges[edge_id]
            if vertex == u:
                bound.append(Dart(edge_id, 0))
            elif vertex == v:
                bound.append(Dart(edge_id, 1))
            else:
                raise DanglingDart(
                    f"line {lineno}: edge {edge_id} is not incident to vertex {vertex}"
                )
        rotations[vertex] = bound
    g = make_embedding(n, ordered, rotations)
    logger.debug("parsed embedding n=%d m=%d", g.num_vertices, g.num_edges)
    return g


def serialize_embedding(g: PlanarEmbedding) -> str:
    lines = [f"p planar {g.num_vertices} {g.num_edges}"]
    lines += [f"e {edge.id} {edge.u} {edge.v}" for edge in g.edges]
    for vertex in g.vertices():
        rotation = g.rotation(vertex)
        darts = " ".join(str(dart.edge) for dart in rotation)
        lines.append(f"r {vertex} {len(rotation)} {darts}".rstrip())
    return "\n".join(lines) + "\n"


def embedding_from_positions(
    num_vertices: int,
    edges: Sequence[tuple[int, int]],
    positions: Mapping[int, tuple[float, float]],
) -> PlanarEmbedding:
    """Rotation system of a crossing-free straight-line drawing."""
    incident: dict[int, list[tuple[float, Dart]]] = {v: [] for v in range(1, num_vertices + 1)}
    for edge_id, (u, v) in enumerate(edges, start=1):
        (ux, uy), (vx, vy) = positions[u], positions[v]
        incident[u].append((math.atan2(vy - uy, vx - ux), Dart(edge_id, 0)))
        incident[v].append((math.atan2(uy - vy, ux - vx), Dart(edge_id, 1)))
    rotations = {
        vertex: [dart for _, dart in sorted(pairs)]
        for vertex, pairs in incident.items()
    }
    return make_embedding(num_vertices, edges, rotations)


def duplicate_edges(
    g: PlanarEmbedding, counts: Mapping[int, int]
) -> tuple[PlanarEmbedding, dict[int, tuple[int, ...]]]:
    """
    Add ``counts[e]`` parallel copies of every edge e.

    Each copy is inserted right after the original at ``u`` and right before
    it at ``v``, so every copy closes a 2-gon with its neighbor and every other
    face keeps its length. Copies get ids m+1, m+2, ... in order of
    (original id, copy index). Returns the new embedding and, per original
    edge, its copy ids in insertion order.
    """
    pairs = [(edge.u, edge.v) for edge in g.edges]
    rotations = {vertex: list(g.rotation(vertex)) for vertex in g.vertices()}
    copies: dict[int, tuple[int, ...]] = {}
    for edge_id in sorted(counts):
        edge = g.edge(edge_id)
        added = []
        for _ in range(counts[edge_id]):
            pairs.append((edge.u, edge.v))
            copy_id = len(pairs)
            at_u = rotations[edge.u]
            at_u.insert(at_u.index(Dart(edge_id, 0)) + 1, Dart(copy_id, 0))
            at_v = rotations[edge.v]
            at_v.insert(at_v.index(Dart(edge_id, 1)), Dart(copy_id, 1))
            added.append(copy_id)
        if added:
            copies[edge_id] = tuple(added)
    return make_embedding(g.num_vertices, pairs, rotations), copies


def double_all_edges(g: PlanarEmbedding) -> PlanarEmbedding:
    doubled, _ = duplicate_edges(g, {edge.id: 1 for edge in g.edges})
    return doubled
