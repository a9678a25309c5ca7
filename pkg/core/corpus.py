"""
Deterministic example graphs, their face vectors and witness walks.

Each fixture carries the values other modules must reproduce, tagged with
where the value comes from: PUBLISHED (quoted from the literature), DERIVED
(computed by hand from the construction) or TRIVIAL.

Straight-line drawings are turned into rotation systems by sorting neighbors
by angle, so every embedding-bearing fixture is planar by construction.
"""

import math
import random
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx

from .embedding import (
    PlanarEmbedding,
    double_all_edges,
    embedding_from_positions,
    trace_faces,
)
from .exceptions import BadParams, UnknownFixture

PUBLISHED = "PUBLISHED"
DERIVED = "DERIVED"
TRIVIAL = "TRIVIAL"


@dataclass(frozen=True)
class Fixture:
    name: str
    face_lengths: tuple[int, ...]  # sorted
    embedding: PlanarEmbedding | None = None
    walks: tuple[tuple[int, ...], ...] = ()
    expected: dict[str, object] = field(default_factory=dict)
    provenance: dict[str, str] = field(default_factory=dict)


def _fixture(name, embedding, walks=(), **expected) -> Fixture:
    """``expected`` values are (value, provenance) pairs."""
    return Fixture(
        name=name,
        face_lengths=tuple(sorted(trace_faces(embedding).lengths())),
        embedding=embedding,
        walks=tuple(tuple(walk) for walk in walks),
        expected={key: value for key, (value, _) in expected.items()},
        provenance={key: tag for key, (_, tag) in expected.items()},
    )


def _circle(count: int, radius: float = 1.0, start: float = 0.0) -> list[tuple[float, float]]:
    return [
        (radius * math.cos(start + 2 * math.pi * i / count),
         radius * math.sin(start + 2 * math.pi * i / count))
        for i in range(count)
    ]


def cycle(k: int) -> Fixture:
    if k < 3:
        raise BadParams("cycle needs k >= 3")
    positions = dict(enumerate(_circle(k), start=1))
    edges = [(i, i % k + 1) for i in range(1, k + 1)]
    return _fixture(
        f"cycle({k})",
        embedding_from_positions(k, edges, positions),
        walks=[range(1, k + 1)],
        grinberg_set=((0,), TRIVIAL),
        h=(k, TRIVIAL),
    )


def star(q: int) -> Fixture:
    if q < 1:
        raise BadParams("star needs q >= 1 leaves")
    positions = {1: (0.0, 0.0), **dict(enumerate(_circle(q), start=2))}
    edges = [(1, leaf) for leaf in range(2, q + 2)]
    return _fixture(
        f"star({q})",
        embedding_from_positions(q + 1, edges, positions),
        h=(2 * q, PUBLISHED),
        grinberg_set_doubled=((2 * q - 2,), DERIVED),
    )


def path_tree(q: int) -> Fixture:
    """Path with q edges (q + 1 vertices)."""
    if q < 1:
        raise BadParams("path_tree needs q >= 1 edges")
    positions = {v: (float(v), 0.0) for v in range(1, q + 2)}
    edges = [(v, v + 1) for v in range(1, q + 1)]
    return _fixture(
        f"path_tree({q})",
        embedding_from_positions(q + 1, edges, positions),
        h=(2 * q, PUBLISHED),
        grinberg_set_doubled=((2 * q - 2,), PUBLISHED if q == 10 else DERIVED),
    )


def grid(rows: int, cols: int) -> Fixture:
    """Row-major labels; rotations follow compass order from the drawing."""
    if rows < 1 or cols < 1 or rows * cols < 2:
        raise BadParams("grid needs rows, cols >= 1 and at least two vertices")

    def label(r: int, c: int) -> int:
        return r * cols + c + 1

    positions = {label(r, c): (float(c), float(-r)) for r in range(rows) for c in range(cols)}
    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((label(r, c), label(r, c + 1)))
            if r + 1 < rows:
                edges.append((label(r, c), label(r + 1, c)))
    expected = {}
    if (rows, cols) == (3, 3):
        expected = dict(
            grinberg_set=((2, 6, 10), DERIVED),
            g=(2, PUBLISHED),
            repeat_lower_bound=(1, PUBLISHED),
            h=(10, DERIVED),
        )
    return _fixture(
        f"grid({rows},{cols})",
        embedding_from_positions(rows * cols, edges, positions),
        walks=[(1, 2, 3, 6, 9, 8, 7, 4, 5, 2)] if (rows, cols) == (3, 3) else (),
        **expected,
    )


def altered_tree(base: str, *params) -> Fixture:
    """A tree fixture with every edge doubled."""
    tree = fixture(base, *params)
    g = tree.embedding
    if g is None or g.num_edges != g.num_vertices - 1:
        raise BadParams(f"{tree.name} is not a tree")
    expected = {}
    if "grinberg_set_doubled" in tree.expected:
        values = tree.expected["grinberg_set_doubled"]
        expected = dict(
            grinberg_set=(values, tree.provenance["grinberg_set_doubled"]),
            g=(values[0], tree.provenance["grinberg_set_doubled"]),
        )
    return _fixture(f"altered_tree({tree.name})", double_all_edges(g), **expected)


def k4() -> Fixture:
    positions = {1: (0.0, 0.0), **dict(enumerate(_circle(3, start=math.pi / 2), start=2))}
    edges = [(1, 2), (1, 3), (1, 4), (2, 3), (3, 4), (4, 2)]
    return _fixture(
        "k4",
        embedding_from_positions(4, edges, positions),
        walks=[(1, 2, 3, 4)],
        grinberg_set=((0, 2), DERIVED),
        h=(4, TRIVIAL),
    )


def hexcluster5() -> Fixture:
    """
    A hexagon with four of its six neighbors (hex directions 1, 2, 4, 5).

    The two neighbor pairs 1-2 and 4-5 touch each other, giving six shared
    edges: 20 vertices, 24 edges, five hexagons and an 18-edge outer face.
    """
    labels: dict[tuple[float, float], int] = {}
    positions: dict[int, tuple[float, float]] = {}
    edges: list[tuple[int, int]] = []
    seen: set[frozenset[int]] = set()
    centers = [(0.0, 0.0)] + [
        (math.sqrt(3) * math.cos(math.pi / 3 * d), math.sqrt(3) * math.sin(math.pi / 3 * d))
        for d in (1, 2, 4, 5)
    ]
    for cx, cy in centers:
        corners = []
        for x, y in _circle(6, start=math.pi / 6):
            point = (cx + x, cy + y)
            key = (round(point[0], 6), round(point[1], 6))
            if key not in labels:
                labels[key] = len(labels) + 1
                positions[labels[key]] = point
            corners.append(labels[key])
        for u, v in zip(corners, corners[1:] + corners[:1]):
            if frozenset((u, v)) not in seen:
                seen.add(frozenset((u, v)))
                edges.append((u, v))
    return _fixture(
        "hexcluster5",
        embedding_from_positions(len(labels), edges, positions),
        grinberg_set=((4, 12, 20, 28), PUBLISHED),
        g=(4, PUBLISHED),
        repeat_lower_bound=(2, PUBLISHED),
    )


def fig5() -> Fixture:
    """
    Outer 26-cycle with two interior 4-edge paths a-b-c-d-x and a-e-f-g-y.

    Three 14-faces force the attachment points: a face bounded by a path and
    an outer arc has 4 + arc edges, the middle one 4 + 4 + arc edges, so the
    arcs are a->x = 10, x->y = 6, y->a = 10. Labels: a = 1, x = 11, y = 17
    on the cycle 1..26; b, c, d = 27, 28, 29; e, f, g = 30, 31, 32.
    """
    outer = 26
    positions = dict(enumerate(_circle(outer, start=math.pi), start=1))
    edges = [(v, v % outer + 1) for v in range(1, outer + 1)]
    a, x, y = 1, 11, 17
    for end, inner in ((x, (27, 28, 29)), (y, (30, 31, 32))):
        (ax, ay), (ex, ey) = positions[a], positions[end]
        for step, v in enumerate(inner, start=1):
            positions[v] = (ax + (ex - ax) * step / 4, ay + (ey - ay) * step / 4)
        path = [a, *inner, end]
        edges += list(zip(path, path[1:]))
    witness = tuple(range(1, outer + 1)) + (1, 27, 28, 29, 28, 27, 1, 30, 31, 32, 31, 30)
    return _fixture(
        "fig5",
        embedding_from_positions(32, edges, positions),
        walks=[witness],
        grinberg_set=((12, 36), DERIVED),
        g=(12, PUBLISHED),
        repeat_lower_bound=(6, PUBLISHED),
        h=(38, PUBLISHED),
        f=(12, DERIVED),
    )


def twin_octagons() -> Fixture:
    """
    Smallest simple host of the walk a..h, a, i, j, r, j, k..n, p, q, p, n, o.

    Two octagons a..h and a, i, j, k, l, m, n, o touching at a, a pendant
    edge j-r and a pendant path n-p-q. This is the walk's support graph, not
    the drawing it was quoted with; it reproduces rho = 4 and 6 reduced faces.
    Labels: a..h = 1..8, i = 9, j = 10, r = 11, k..n = 12..15, p = 16,
    q = 17, o = 18.
    """
    positions = {}
    left = [1, 2, 3, 4, 5, 6, 7, 8]
    right = [1, 9, 10, 12, 13, 14, 15, 18]
    for index, v in enumerate(left):
        angle = math.pi / 4 * index
        positions[v] = (-1 + math.cos(angle), math.sin(angle))
    for index, v in enumerate(right[1:], start=1):
        angle = math.pi - math.pi / 4 * index
        positions[v] = (1 + math.cos(angle), math.sin(angle))
    positions[11] = (1.0, 2.0)
    positions[16] = (1.0, -2.0)
    positions[17] = (1.0, -3.0)
    edges = list(zip(left, left[1:] + left[:1])) + list(zip(right, right[1:] + right[:1]))
    edges += [(10, 11), (15, 16), (16, 17)]
    walk = (1, 2, 3, 4, 5, 6, 7, 8, 1, 9, 10, 11, 10, 12, 13, 14, 15, 16, 17, 16, 15, 18)
    return _fixture(
        "twin_octagons",
        embedding_from_positions(18, edges, positions),
        walks=[walk],
        repeats=(4, PUBLISHED),
        phi=(6, PUBLISHED),
    )


def octagon_faces() -> Fixture:
    """Face vector only: eight octagons inside a 20-edge outer face."""
    return Fixture(
        name="octagon_faces",
        face_lengths=tuple(sorted([8] * 8 + [20])),
        expected={
            "grinberg_set": (6, 18, 30, 42, 54),
            "g": 6,
            "repeat_lower_bound": 3,
        },
        provenance={"grinberg_set": PUBLISHED, "g": PUBLISHED, "repeat_lower_bound": PUBLISHED},
    )


FIXTURES: dict[str, Callable[..., Fixture]] = {
    "cycle": cycle,
    "star": star,
    "path_tree": path_tree,
    "grid": grid,
    "altered_tree": altered_tree,
    "hexcluster5": hexcluster5,
    "fig5": fig5,
    "twin_octagons": twin_octagons,
    "octagon_faces": octagon_faces,
    "k4": k4,
}

DEFAULT_CORPUS: tuple[tuple, ...] = (
    ("cycle", 6),
    ("star", 4),
    ("path_tree", 10),
    ("grid", 3, 3),
    ("altered_tree", "path_tree", 10),
    ("hexcluster5",),
    ("fig5",),
    ("twin_octagons",),
    ("octagon_faces",),
    ("k4",),
)


def _coerce(name: str, params: Sequence) -> list:
    if name == "altered_tree":
        if not params:
            raise BadParams("altered_tree needs a base fixture name")
        return [str(params[0]), *_coerce(str(params[0]), params[1:])]
    try:
        return [int(param) for param in params]
    except (TypeError, ValueError):
        raise BadParams(f"{name} takes integer parameters, got {list(params)}") from None


def fixture(name: str, *params) -> Fixture:
    try:
        build = FIXTURES[name]
    except KeyError:
        raise UnknownFixture(f"unknown fixture {name!r}; known: {sorted(FIXTURES)}") from None
    try:
        return build(*_coerce(name, params))
    except TypeError:
        raise BadParams(f"wrong number of parameters for {name}: {list(params)}") from None


def _orient(p, q, r) -> int:
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def _crosses(p1, p2, p3, p4) -> bool:
    if {p1, p2} & {p3, p4}:
        return False
    return (
        _orient(p1, p2, p3) * _orient(p1, p2, p4) < 0
        and _orient(p3, p4, p1) * _orient(p3, p4, p2) < 0
    )


def random_plane_graph(seed: int, n: int, keep: float = 0.6) -> PlanarEmbedding:
    """
    Seeded random connected straight-line plane graph on n vertices.

    Integer points in general position are greedily triangulated with
    non-crossing segments, then edges are dropped with probability
    1 - keep as long as the graph stays connected.
    """
    if n < 1:
        raise BadParams("random_plane_graph needs n >= 1")
    rng = random.Random(seed)
    points: list[tuple[int, int]] = []
    while len(points) < n:
        point = (rng.randint(0, 60), rng.randint(0, 60))
        if point in points or any(_orient(p, q, point) == 0 for p, q in combinations(points, 2)):
            continue
        points.append(point)

    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    chosen: list[tuple[int, int]] = []
    for i, j in pairs:
        if not any(_crosses(points[i], points[j], points[k], points[l]) for k, l in chosen):
            chosen.append((i, j))

    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(chosen)
    for i, j in chosen:
        if rng.random() < keep:
            continue
        graph.remove_edge(i, j)
        if not nx.is_connected(graph):
            graph.add_edge(i, j)

    edges = sorted((i + 1, j + 1) for i, j in graph.edges())
    positions = {i + 1: (float(x), float(y)) for i, (x, y) in enumerate(points)}
    return embedding_from_positions(n, edges, positions)
