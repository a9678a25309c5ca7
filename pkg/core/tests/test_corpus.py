from django.test import SimpleTestCase

from core.corpus import (
    DEFAULT_CORPUS,
    FIXTURES,
    PUBLISHED,
    altered_tree,
    fig5,
    fixture,
    grid,
    hexcluster5,
    octagon_faces,
    random_plane_graph,
    twin_octagons,
)
from core.embedding import trace_faces
from core.exceptions import BadParams, UnknownFixture
from hamiltonian.grinberg import grinberg_set, repeat_lower_bound
from hamiltonian.walks import validate_walk


class FixtureShapeTests(SimpleTestCase):
    def test_grid_face_vector(self):
        item = grid(3, 3)
        self.assertEqual(item.face_lengths, (4, 4, 4, 4, 8))
        self.assertEqual(item.embedding.num_vertices, 9)
        self.assertEqual(item.embedding.num_edges, 12)

    def test_hexcluster5(self):
        item = hexcluster5()
        self.assertEqual(item.face_lengths, (6, 6, 6, 6, 6, 18))
        self.assertEqual(item.embedding.num_vertices, 20)
        self.assertEqual(item.embedding.num_edges, 24)

    def test_fig5(self):
        item = fig5()
        self.assertEqual(item.face_lengths, (14, 14, 14, 26))
        self.assertEqual(item.embedding.num_vertices, 32)
        stats = validate_walk(item.embedding, item.walks[0])
        self.assertEqual((stats.length, stats.repeats), (38, 6))

    def test_twin_octagons(self):
        item = twin_octagons()
        self.assertEqual(item.face_lengths, (8, 8, 22))
        self.assertEqual(item.embedding.num_vertices, 18)
        stats = validate_walk(item.embedding, item.walks[0])
        self.assertEqual(stats.repeats, item.expected["repeats"])
        self.assertEqual(2 + stats.repeats, item.expected["phi"])

    def test_altered_path_tree(self):
        item = altered_tree("path_tree", 10)
        self.assertEqual(item.name, "altered_tree(path_tree(10))")
        self.assertEqual(item.face_lengths, (2,) * 10 + (20,))
        self.assertEqual(item.expected["grinberg_set"], (18,))
        self.assertEqual(item.provenance["grinberg_set"], PUBLISHED)

    def test_octagon_faces_has_no_embedding(self):
        item = octagon_faces()
        self.assertIsNone(item.embedding)
        self.assertEqual(item.face_lengths, (8,) * 8 + (20,))

    def test_embedding_bearing_fixtures_retrace_their_face_vector(self):
        for name, *params in DEFAULT_CORPUS:
            item = fixture(name, *params)
            if item.embedding is None:
                continue
            with self.subTest(fixture=item.name):
                traced = tuple(sorted(trace_faces(item.embedding).lengths()))
                self.assertEqual(traced, item.face_lengths)

    def test_witness_walks_validate(self):
        for name, *params in DEFAULT_CORPUS:
            item = fixture(name, *params)
            for walk in item.walks:
                with self.subTest(fixture=item.name):
                    self.assertTrue(validate_walk(item.embedding, walk).spanning)


class ExpectedValueTests(SimpleTestCase):
    def test_stored_grinberg_values_match_recomputation(self):
        for name, *params in DEFAULT_CORPUS:
            item = fixture(name, *params)
            if "grinberg_set" not in item.expected:
                continue
            with self.subTest(fixture=item.name):
                s = grinberg_set(item.face_lengths)
                self.assertEqual(s.values, tuple(item.expected["grinberg_set"]))
                if "g" in item.expected:
                    self.assertEqual(s.g, item.expected["g"])
                if "repeat_lower_bound" in item.expected:
                    self.assertEqual(repeat_lower_bound(s.g), item.expected["repeat_lower_bound"])

    def test_every_expected_value_has_provenance(self):
        for name, *params in DEFAULT_CORPUS:
            item = fixture(name, *params)
            with self.subTest(fixture=item.name):
                self.assertEqual(set(item.expected), set(item.provenance))


class FixtureLookupTests(SimpleTestCase):
    def test_string_parameters_are_coerced(self):
        self.assertEqual(fixture("grid", "3", "3").name, "grid(3,3)")
        self.assertEqual(fixture("altered_tree", "star", "4").name, "altered_tree(star(4))")

    def test_every_registered_name_builds(self):
        params = {"cycle": (5,), "star": (3,), "path_tree": (4,), "grid": (2, 3),
                  "altered_tree": ("star", 3)}
        for name in FIXTURES:
            with self.subTest(fixture=name):
                self.assertTrue(fixture(name, *params.get(name, ())).face_lengths)

    def test_unknown_fixture(self):
        with self.assertRaises(UnknownFixture):
            fixture("petersen")

    def test_bad_params(self):
        with self.assertRaises(BadParams):
            fixture("grid", "x", "3")
        with self.assertRaises(BadParams):
            fixture("cycle")
        with self.assertRaises(BadParams):
            fixture("cycle", 2)
        with self.assertRaises(BadParams):
            fixture("altered_tree", "grid", 3, 3)
        with self.assertRaises(BadParams):
            fixture("altered_tree")


class RandomPlaneGraphTests(SimpleTestCase):
    def test_same_seed_same_graph(self):
        self.assertEqual(random_plane_graph(7, 6), random_plane_graph(7, 6))

    def test_vertex_count_and_connectivity(self):
        for seed in range(20):
            g = random_plane_graph(seed, 3 + seed % 5)
            with self.subTest(seed=seed):
                self.assertEqual(g.num_vertices, 3 + seed % 5)
                self.assertGreaterEqual(g.num_edges, g.num_vertices - 1)
                self.assertLessEqual(g.num_edges, 3 * g.num_vertices - 6)
                self.assertFalse(g.has_parallel_edges())
