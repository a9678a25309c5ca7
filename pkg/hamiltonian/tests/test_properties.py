"""
Randomized checks over seeded random plane graphs with 3 to 7 vertices.
"""

import random
from itertools import product

from django.test import SimpleTestCase

from core.corpus import random_plane_graph
from core.embedding import double_all_edges, parse_embedding, serialize_embedding, trace_faces
from hamiltonian.grinberg import (
    feasible_repeat_counts,
    grinberg_set,
    grinberg_set_for_walks,
    repeat_lower_bound,
)
from hamiltonian.reduction import reduction_report
from hamiltonian.walks import (
    ClosedWalk,
    hamiltonian_number_exact,
    hamiltonian_spectrum,
    spanning_tree_walk,
    validate_walk,
)

GRAPH_COUNT = 200
DETOURS = 4


def sample_graphs():
    for seed in range(GRAPH_COUNT):
        yield seed, random_plane_graph(seed, 3 + seed % 5)


def brute_force_grinberg_set(face_lengths):
    values = set()
    for signs in product((1, -1), repeat=len(face_lengths)):
        if len(set(signs)) > 1:
            values.add(abs(sum(e * (length - 2) for e, length in zip(signs, face_lengths))))
    return tuple(sorted(values))


def with_detour(walk: ClosedWalk, g, rng: random.Random) -> ClosedWalk:
    """Splice v -> w -> v into the walk at a random position (L grows by 2)."""
    vertices = list(walk.vertices)
    index = rng.randrange(len(vertices))
    v = vertices[index]
    w = rng.choice(sorted(g.simple_graph()[v]))
    return ClosedWalk(tuple(vertices[: index + 1] + [w, v] + vertices[index + 1 :]))


class RandomGraphPropertyTests(SimpleTestCase):
    def test_graphs_survive_a_file_round_trip(self):
        for seed, g in sample_graphs():
            with self.subTest(seed=seed):
                again = parse_embedding(serialize_embedding(g))
                faces = len(trace_faces(again))
                self.assertEqual(again.num_vertices - again.num_edges + faces, 2)

                doubled = double_all_edges(g)
                self.assertEqual(doubled.num_vertices, g.num_vertices)
                self.assertEqual(doubled.num_edges, 2 * g.num_edges)
                self.assertEqual(len(trace_faces(doubled)), faces + g.num_edges)

    def test_spectrum_minimum_equals_exact_solver(self):
        for seed, g in sample_graphs():
            with self.subTest(seed=seed):
                solved = hamiltonian_number_exact(g)
                self.assertEqual(min(hamiltonian_spectrum(g)), solved.h)
                n = g.num_vertices
                self.assertTrue(n <= solved.h <= 2 * (n - 1))

    def test_solver_walk_revalidates_with_length_h(self):
        for seed, g in sample_graphs():
            with self.subTest(seed=seed):
                solved = hamiltonian_number_exact(g)
                self.assertEqual(validate_walk(g, solved.walk).length, solved.h)

    def test_trees_and_only_trees_need_twice_their_edges(self):
        for seed, g in sample_graphs():
            with self.subTest(seed=seed):
                h = hamiltonian_number_exact(g).h
                is_tree = g.num_edges == g.num_vertices - 1
                self.assertEqual(h == 2 * (g.num_vertices - 1), is_tree)

    def test_dynamic_program_matches_brute_force(self):
        for seed, g in sample_graphs():
            lengths = trace_faces(g).lengths()
            if len(lengths) < 2:
                continue
            with self.subTest(seed=seed):
                s = grinberg_set(lengths)
                self.assertEqual(s.values, brute_force_grinberg_set(lengths))
                self.assertTrue(all(value % 2 == 0 for value in s))
                contributions = [length - 2 for length in lengths]
                self.assertLessEqual(max(s.values), s.total)
                self.assertEqual(max(s.values), s.total - 2 * min(contributions))

    def test_hamiltonian_graphs_have_grinberg_number_zero(self):
        for seed, g in sample_graphs():
            if hamiltonian_number_exact(g).h != g.num_vertices:
                continue
            with self.subTest(seed=seed):
                s, _ = grinberg_set_for_walks(g)
                self.assertEqual(s.g, 0)

    def test_every_walk_respects_the_repeat_bound(self):
        rng = random.Random(2024)
        checked = 0
        for seed, g in sample_graphs():
            s, _ = grinberg_set_for_walks(g)
            walks = [hamiltonian_number_exact(g).walk, spanning_tree_walk(g)]
            for _ in range(DETOURS):
                walks.append(with_detour(walks[-1], g, rng))
            for walk in walks:
                with self.subTest(seed=seed, walk=walk.vertices):
                    stats = validate_walk(g, walk)
                    self.assertGreaterEqual(stats.repeats, repeat_lower_bound(s.g))
                    self.assertIn(stats.repeats, feasible_repeat_counts(s, stats.repeats))
                    report = reduction_report(g, walk)
                    self.assertTrue(report.all_ok, report.checks)
                    self.assertEqual(report.sum_m, stats.repeats)
                checked += 1
        self.assertGreaterEqual(checked, 1000)
