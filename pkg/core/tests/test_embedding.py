from django.test import SimpleTestCase

from core.corpus import grid, k4
from core.embedding import (
    Dart,
    double_all_edges,
    duplicate_edges,
    embedding_from_positions,
    parse_embedding,
    serialize_embedding,
    trace_faces,
)
from core.exceptions import (
    DanglingDart,
    Disconnected,
    GraphFileSyntaxError,
    LoopEdge,
    NonPlanarEmbedding,
)

TRIANGLE = """\
# a triangle
p planar 3 3
e 1 1 2
e 2 2 3
e 3 3 1

r 1 2 1 3
r 2 2 2 1   # trailing comment
r 3 2 3 2
"""

K5 = """\
p planar 5 10
e 1 1 2
e 2 1 3
e 3 1 4
e 4 1 5
e 5 2 3
e 6 2 4
e 7 2 5
e 8 3 4
e 9 3 5
e 10 4 5
r 1 4 1 2 3 4
r 2 4 1 5 6 7
r 3 4 2 5 8 9
r 4 4 3 6 8 10
r 5 4 4 7 9 10
"""


class ParseEmbeddingTests(SimpleTestCase):
    def test_triangle_has_two_faces_of_length_three(self):
        g = parse_embedding(TRIANGLE)
        self.assertEqual(g.num_vertices, 3)
        self.assertEqual(g.num_edges, 3)
        self.assertEqual(trace_faces(g).lengths(), (3, 3))

    def test_serialize_then_parse_gives_the_same_embedding(self):
        g = grid(3, 3).embedding
        self.assertEqual(parse_embedding(serialize_embedding(g)), g)

    def test_single_vertex_has_one_empty_face(self):
        g = parse_embedding("p planar 1 0\n")
        self.assertEqual(trace_faces(g).lengths(), (0,))

    def test_single_edge_has_one_face_of_length_two(self):
        g = parse_embedding("p planar 2 1\ne 1 1 2\nr 1 1 1\nr 2 1 1\n")
        self.assertEqual(trace_faces(g).lengths(), (2,))

    def test_parallel_edges_are_accepted(self):
        g = parse_embedding("p planar 2 2\ne 1 1 2\ne 2 1 2\nr 1 2 1 2\nr 2 2 2 1\n")
        self.assertTrue(g.has_parallel_edges())
        self.assertEqual(g.edges_between(2, 1), [1, 2])
        self.assertEqual(trace_faces(g).lengths(), (2, 2))

    def test_missing_header(self):
        with self.assertRaises(GraphFileSyntaxError):
            parse_embedding("e 1 1 2\n")

    def test_syntax_error_reports_the_line(self):
        with self.assertRaisesMessage(GraphFileSyntaxError, "line 2:"):
            parse_embedding("p planar 2 1\ne 1 1 x\n")

    def test_edge_count_must_match_header(self):
        with self.assertRaises(GraphFileSyntaxError):
            parse_embedding("p planar 2 2\ne 1 1 2\nr 1 1 1\nr 2 1 1\n")

    def test_unknown_line_type(self):
        with self.assertRaises(GraphFileSyntaxError):
            parse_embedding("p planar 1 0\nq 1\n")

    def test_loop(self):
        with self.assertRaises(LoopEdge):
            parse_embedding("p planar 1 1\ne 1 1 1\nr 1 2 1 1\n")

    def test_dart_missing_from_rotation(self):
        with self.assertRaises(DanglingDart):
            parse_embedding("p planar 2 1\ne 1 1 2\nr 1 1 1\n")

    def test_rotation_lists_edge_of_another_vertex(self):
        with self.assertRaises(DanglingDart):
            parse_embedding(
                "p planar 3 2\ne 1 1 2\ne 2 2 3\nr 1 2 1 2\nr 2 2 1 2\nr 3 1 2\n"
            )

    def test_disconnected(self):
        with self.assertRaises(Disconnected):
            parse_embedding("p planar 2 0\n")

    def test_k5_fails_euler_formula(self):
        with self.assertRaises(NonPlanarEmbedding):
            parse_embedding(K5)


class FaceTracingTests(SimpleTestCase):
    def test_every_dart_lies_on_exactly_one_face(self):
        g = grid(3, 3).embedding
        faces = trace_faces(g)
        darts = [dart for face in faces for dart in face.darts]
        self.assertEqual(len(darts), 2 * g.num_edges)
        self.assertEqual(set(darts), set(g.darts()))

    def test_grid_faces_are_numbered_by_smallest_dart(self):
        faces = trace_faces(grid(3, 3).embedding)
        self.assertEqual(faces.lengths(), (4, 8, 4, 4, 4))
        self.assertEqual(faces.face_of[Dart(1, 0)], 1)
        self.assertEqual(faces[1].length, 4)

    def test_grid_first_face_is_the_top_left_square(self):
        g = grid(3, 3).embedding
        face = trace_faces(g)[1]
        self.assertEqual([g.tail(dart) for dart in face.darts], [1, 2, 5, 4])

    def test_next_in_face_follows_the_rotation(self):
        g = grid(3, 3).embedding
        # arriving at 2 from 1, the next dart counterclockwise goes down to 5
        self.assertEqual(g.next_in_face(Dart(1, 0)), Dart(4, 0))


class EmbeddingConstructionTests(SimpleTestCase):
    def test_positions_of_a_square(self):
        positions = {1: (0.0, 0.0), 2: (1.0, 0.0), 3: (1.0, 1.0), 4: (0.0, 1.0)}
        g = embedding_from_positions(4, [(1, 2), (2, 3), (3, 4), (4, 1)], positions)
        self.assertEqual(trace_faces(g).lengths(), (4, 4))

    def test_duplicate_edges_adds_one_two_gon_per_copy(self):
        g = parse_embedding(TRIANGLE)
        h, copies = duplicate_edges(g, {1: 2})
        self.assertEqual(copies, {1: (4, 5)})
        self.assertEqual(h.num_edges, 5)
        self.assertEqual(sorted(trace_faces(h).lengths()), [2, 2, 3, 3])

    def test_duplicate_edges_places_copies_next_to_the_original(self):
        g = parse_embedding(TRIANGLE)
        h, _ = duplicate_edges(g, {1: 1})
        self.assertEqual(h.rotation(1), (Dart(1, 0), Dart(4, 0), Dart(3, 1)))
        self.assertEqual(h.rotation(2), (Dart(2, 0), Dart(4, 1), Dart(1, 1)))

    def test_double_all_edges_of_k4(self):
        g = double_all_edges(k4().embedding)
        self.assertEqual(g.num_edges, 12)
        self.assertEqual(sorted(trace_faces(g).lengths()), [2] * 6 + [3] * 4)

    def test_double_all_edges_of_a_path(self):
        g = parse_embedding(
            "p planar 3 2\ne 1 1 2\ne 2 2 3\nr 1 1 1\nr 2 2 1 2\nr 3 1 2\n"
        )
        self.assertEqual(sorted(trace_faces(double_all_edges(g)).lengths()), [2, 2, 4])

    def test_simple_graph_drops_parallel_edges(self):
        g = double_all_edges(k4().embedding)
        self.assertEqual(g.simple_graph().number_of_edges(), 6)
        self.assertEqual(g.to_networkx().number_of_edges(), 12)
