"""
Grinberg sets and the repeat bounds they imply.

For face lengths |F_1|, ..., |F_N| the Grinberg set holds every value
|sum eps_i (|F_i| - 2)| over sign vectors eps in {-1, +1}^N that are not
constant; the Grinberg number g is its minimum. A closed spanning walk repeats
vertices at least g / 2 times, and a Hamiltonian graph has g = 0.

Choosing the "+" faces is a subset-sum problem over c_i = |F_i| - 2: the
subset S gives |2 sum(S) - T| with T = sum c_i.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np
from django.conf import settings

from core.embedding import PlanarEmbedding, double_all_edges, trace_faces
from core.metrics import bridges

from .exceptions import FaceSumTooLarge, InvalidFaceLengths, OddGrinbergNumber, TooFewFaces

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GrinbergSet:
    values: tuple[int, ...]  # sorted, distinct
    total: int = 0  # T, the value of the excluded constant sign vectors

    @property
    def g(self) -> int:
        return self.values[0]

    def __contains__(self, value: int) -> bool:
        return value in self.values

    def __iter__(self):
        return iter(self.values)


def grinberg_set(face_lengths: Iterable[int], limit: int | None = None) -> GrinbergSet:
    """
    The reachability table has T + 1 entries; T above ``limit`` (default
    ``PLANAR_GRINBERG_LIMIT``) is refused before anything is allocated.
    """
    lengths = [int(length) for length in face_lengths]
    if len(lengths) <= 1:
        raise TooFewFaces(f"{len(lengths)} face(s); at least two are needed")
    if min(lengths) < 2:
        raise InvalidFaceLengths(f"face lengths must be at least 2, got {min(lengths)}")

    total = sum(lengths) - 2 * len(lengths)
    limit = settings.PLANAR_GRINBERG_LIMIT if limit is None else limit
    if total > limit:
        raise FaceSumTooLarge(total, limit)
    contributions = np.array(lengths, dtype=np.int64) - 2
    reachable = np.zeros(total + 1, dtype=bool)
    reachable[0] = True
    for c in contributions[contributions > 0]:
        shifted = np.zeros_like(reachable)
        shifted[c:] = reachable[: total + 1 - c]
        reachable |= shifted

    # With every c_i > 0 the sums 0 and T come only from the empty and the
    # full subset, i.e. the two constant sign vectors.
    if np.all(contributions > 0):
        reachable[0] = reachable[total] = False

    sums = np.flatnonzero(reachable)
    values = np.unique(np.abs(2 * sums - total))
    return GrinbergSet(tuple(int(value) for value in values), total)


def grinberg_number(s: GrinbergSet) -> int:
    return s.values[0]


def grinberg_set_of(g: PlanarEmbedding) -> GrinbergSet:
    """Grinberg set of an embedding, warning when faces repeat bridge edges."""
    found = bridges(g)
    if found:
        logger.warning(
            "bridges %s: face lengths count repeated boundary edges; "
            "double all edges first to follow the tree recipe",
            sorted(found),
        )
    return grinberg_set(trace_faces(g).lengths())


def grinberg_set_for_walks(g: PlanarEmbedding) -> tuple[GrinbergSet, bool]:
    """
    Grinberg set used to bound walks on g.

    Graphs with bridges are doubled first (walks and repeats are unchanged,
    2-gons contribute nothing); the flag tells whether that happened.
    """
    if bridges(g):
        return grinberg_set(trace_faces(double_all_edges(g)).lengths()), True
    return grinberg_set(trace_faces(g).lengths()), False


def repeat_lower_bound(g_num: int) -> int:
    if g_num % 2:
        raise OddGrinbergNumber(f"Grinberg number {g_num} is odd")
    if g_num < 0:
        raise ValueError("Grinberg numbers are non-negative")
    return g_num // 2


def hamiltonian_lower_bound(g: PlanarEmbedding) -> int:
    """n + g(G) / 2: a closed spanning walk of length L repeats L - n vertices."""
    return g.num_vertices + repeat_lower_bound(grinberg_number(grinberg_set_of(g)))


def feasible_repeat_counts(s: GrinbergSet, cap: int) -> frozenset[int]:
    """
    Repeat counts f/2 + 2k (k >= 0) up to cap.

    f ranges over the set and over T: a walk whose reduction puts every face
    of g on one side matches the constant sign vector.
    """
    return frozenset(
        rho
        for f in (*s.values, s.total)
        for rho in range(f // 2, cap + 1, 2)
    )


def hamiltonicity_necessary_condition(g: PlanarEmbedding) -> bool:
    """False certifies that g has no Hamiltonian cycle."""
    return grinberg_number(grinberg_set_of(g)) == 0
