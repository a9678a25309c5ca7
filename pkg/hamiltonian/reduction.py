"""
Reduction of a planar graph relative to a closed spanning walk.

The reduced multigraph G' keeps the traversed edges of G, once per traversal.
It is built as H, the host with one parallel copy per extra traversal (each
copy closes a 2-gon), whose faces are then merged across the untraversed
edges. Every host face therefore sits inside exactly one G' face, which is
what the signed face sum needs.

G' is Eulerian (deg v = 2 m_v + 2), so its faces two-color; the report checks

    eq1       Phi = 2 + sum m_v
    balance   sum |A+| = sum |A-| = |E(G')|
    eq2       |sum (|A+| - 2) - sum (|A-| - 2)| = 2 |Delta|
    eq3       |sum eps_i (|F_i| - 2)| = 2 |Delta|, eps_i the sign around host face i
    theorem   sum m_v >= g / 2
    rho       sum m_v = f/2 + 2 min(nu, pi), with f = 2 |Delta| in the Grinberg set
    degrees   deg v = 2 m_v + 2 in G'

When every host face lands in a class of one sign (a walk that doubles a
spanning tree, for instance) f is T = sum (|F_i| - 2) = 2n - 4, the value of
the constant sign vector that the Grinberg set leaves out; T is never below g.
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass, replace

import networkx as nx

from core.embedding import Dart, FaceSet, PlanarEmbedding, duplicate_edges, trace_faces
from core.exceptions import PlanarError

from .exceptions import InvalidWalk, NotSimpleHost, OddDualCycle
from .grinberg import grinberg_set_for_walks, repeat_lower_bound
from .walks import ClosedWalk, WalkStats, validate_walk, walk_edge_traversals

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReducedGraph:
    host: PlanarEmbedding
    walk: ClosedWalk
    stats: WalkStats
    traversals: Mapping[int, int]  # host edge id -> times traversed
    expanded: PlanarEmbedding  # H: host plus one copy per extra traversal
    copies: Mapping[int, tuple[int, ...]]
    faces: FaceSet  # faces of H
    face_class: Mapping[int, int]  # H face id -> G' face id
    class_lengths: tuple[int, ...]  # G' face id - 1 -> boundary length
    host_face_class: tuple[int, ...]  # host face id - 1 -> G' face id
    signs: tuple[int, ...] | None = None  # G' face id - 1 -> +1 / -1

    @property
    def phi(self) -> int:
        return len(self.class_lengths)

    @property
    def num_edges(self) -> int:
        return sum(self.traversals.values())

    def traversed(self, edge_id: int) -> bool:
        """Whether an edge of H survives into G'."""
        return edge_id > self.host.num_edges or edge_id in self.traversals

    def degrees(self) -> tuple[int, ...]:
        degree = [0] * self.host.num_vertices
        for edge_id, count in self.traversals.items():
            edge = self.host.edge(edge_id)
            degree[edge.u - 1] += count
            degree[edge.v - 1] += count
        return tuple(degree)

    @property
    def two_gons(self) -> int:
        return sum(len(ids) for ids in self.copies.values())


@dataclass(frozen=True)
class ReductionReport:
    phi: int
    sum_m: int
    n_plus: int
    n_minus: int
    delta_abs: int
    nu: int
    pi: int
    f: int
    epsilon: tuple[int, ...]
    constant_signs: bool
    class_lengths: tuple[int, ...]
    class_signs: tuple[int, ...]
    two_gons: int
    degrees: tuple[int, ...]
    grinberg_set: tuple[int, ...]
    grinberg_on_doubled: bool
    checks: Mapping[str, bool]

    @property
    def all_ok(self) -> bool:
        return all(self.checks.values())


def _carrier(dart: Dart, copies: Mapping[int, tuple[int, ...]]) -> Dart:
    # The v-end of an original edge hands its face over to its first copy.
    if dart.end == 1 and dart.edge in copies:
        return Dart(copies[dart.edge][0], 1)
    return dart


def reduce_walk(g: PlanarEmbedding, walk: ClosedWalk) -> ReducedGraph:
    if g.has_parallel_edges():
        raise NotSimpleHost("reductions need a host without parallel edges")
    try:
        stats = validate_walk(g, walk)
    except PlanarError as exc:
        raise InvalidWalk(f"{exc.name}: {exc}") from exc
    if walk.length == 0:
        raise InvalidWalk("the walk traverses no edge")

    traversals = dict(walk_edge_traversals(g, walk))
    expanded, copies = duplicate_edges(
        g, {edge_id: count - 1 for edge_id, count in traversals.items() if count > 1}
    )
    faces = trace_faces(expanded)

    merged = nx.utils.UnionFind(face.id for face in faces)
    for edge in g.edges:
        if edge.id not in traversals:
            merged.union(faces.face_of[Dart(edge.id, 0)], faces.face_of[Dart(edge.id, 1)])
    groups = sorted(sorted(group) for group in merged.to_sets())
    face_class = {face_id: index for index, group in enumerate(groups, start=1) for face_id in group}

    lengths = [0] * len(groups)
    for face in faces:
        lengths[face_class[face.id] - 1] += sum(
            1 for dart in face.darts if dart.edge > g.num_edges or dart.edge in traversals
        )

    host_faces = trace_faces(g)
    host_face_class = tuple(
        face_class[faces.face_of[_carrier(face.darts[0], copies)]] for face in host_faces
    )
    logger.debug("reduction: %d H faces merged into %d classes", len(faces), len(groups))
    return ReducedGraph(
        host=g,
        walk=walk,
        stats=stats,
        traversals=traversals,
        expanded=expanded,
        copies=copies,
        faces=faces,
        face_class=face_class,
        class_lengths=tuple(lengths),
        host_face_class=host_face_class,
    )


def sign_faces(r: ReducedGraph, outer_face: int | None = None) -> ReducedGraph:
    """
    Two-color the faces of G' across shared traversed edges.

    The class holding host face ``outer_face`` (default: G' face 1) is "+";
    a global flip changes none of the reported quantities.
    """
    adjacency = nx.Graph()
    adjacency.add_nodes_from(range(1, r.phi + 1))
    for edge in r.expanded.edges:
        if not r.traversed(edge.id):
            continue
        left = r.face_class[r.faces.face_of[Dart(edge.id, 0)]]
        right = r.face_class[r.faces.face_of[Dart(edge.id, 1)]]
        if left == right:
            raise OddDualCycle(f"face {left} of the reduction lies on both sides of edge {edge.id}")
        adjacency.add_edge(left, right)

    if outer_face is None:
        start = 1
    elif 1 <= outer_face <= len(r.host_face_class):
        start = r.host_face_class[outer_face - 1]
    else:
        raise InvalidWalk(f"host has no face {outer_face}")

    signs = {start: 1}
    for u, v in nx.bfs_edges(adjacency, start):
        signs[v] = -signs[u]
    for u, v in adjacency.edges():
        if signs.get(u) == signs.get(v):
            raise OddDualCycle(f"faces {u} and {v} of the reduction share an edge and a sign")
    return replace(r, signs=tuple(signs[c] for c in range(1, r.phi + 1)))


def reduction_report(
    g: PlanarEmbedding, walk: ClosedWalk, outer_face: int | None = None
) -> ReductionReport:
    r = sign_faces(reduce_walk(g, walk), outer_face)
    n_plus = r.signs.count(1)
    n_minus = r.signs.count(-1)
    nu, pi = n_minus - 1, n_plus - 1
    f = 2 * abs(n_minus - n_plus)
    sum_m = r.stats.repeats

    epsilon = tuple(r.signs[c - 1] for c in r.host_face_class)
    host_lengths = trace_faces(g).lengths()
    plus = [length for length, sign in zip(r.class_lengths, r.signs) if sign > 0]
    minus = [length for length, sign in zip(r.class_lengths, r.signs) if sign < 0]
    s, doubled = grinberg_set_for_walks(g)
    degrees = r.degrees()
    constant_signs = len(set(epsilon)) == 1

    checks = {
        "eq1_ok": r.phi == 2 + sum_m,
        "balance_ok": sum(plus) == sum(minus) == r.num_edges,
        "eq2_ok": abs(sum(a - 2 for a in plus) - sum(a - 2 for a in minus)) == f,
        "eq3_ok": abs(sum(e * (length - 2) for e, length in zip(epsilon, host_lengths))) == f,
        "theorem_ok": sum_m >= repeat_lower_bound(s.g),
        "rho_identity_ok": (f in s or (constant_signs and f == s.total))
        and sum_m == f // 2 + 2 * min(nu, pi),
        "degrees_ok": all(
            degree == 2 * m + 2 for degree, m in zip(degrees, r.stats.multiplicities)
        ),
    }
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        logger.warning("reduction checks failed: %s", ", ".join(failed))
    return ReductionReport(
        phi=r.phi,
        sum_m=sum_m,
        n_plus=n_plus,
        n_minus=n_minus,
        delta_abs=abs(n_minus - n_plus),
        nu=nu,
        pi=pi,
        f=f,
        epsilon=epsilon,
        constant_signs=constant_signs,
        class_lengths=r.class_lengths,
        class_signs=r.signs,
        two_gons=r.two_gons,
        degrees=degrees,
        grinberg_set=s.values,
        grinberg_on_doubled=doubled,
        checks=checks,
    )
