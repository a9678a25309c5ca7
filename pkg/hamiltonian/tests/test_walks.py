from django.test import SimpleTestCase, override_settings

from core.corpus import cycle, fig5, grid, k4, path_tree, star, twin_octagons
from core.embedding import parse_embedding
from hamiltonian.exceptions import (
    InvalidWalk,
    NonAdjacentStep,
    NotSpanning,
    TooLarge,
    UnknownVertex,
    WalkSyntaxError,
)
from hamiltonian.walks import (
    ClosedWalk,
    expand_ordering,
    hamiltonian_number_exact,
    hamiltonian_spectrum,
    parse_walk,
    serialize_walk,
    spanning_tree_walk,
    validate_walk,
    walk_edge_traversals,
)

GRID_WALK = (1, 2, 3, 6, 9, 8, 7, 4, 5, 2)


class WalkFileTests(SimpleTestCase):
    def test_parse(self):
        self.assertEqual(parse_walk("w 3 1 2 3\n").vertices, (1, 2, 3))

    def test_comments_are_ignored(self):
        self.assertEqual(parse_walk("# grid\nw 2 1 2  # there and back\n").vertices, (1, 2))

    def test_serialize(self):
        self.assertEqual(serialize_walk(ClosedWalk(GRID_WALK)), "w 10 1 2 3 6 9 8 7 4 5 2\n")

    def test_malformed_walk_files(self):
        for text in ("w 2 1 2 3", "x 2 1 2", "w 1 1\nw 1 1", "w a b", "", "w 0"):
            with self.subTest(text=text), self.assertRaises(WalkSyntaxError):
                parse_walk(text)


class ValidateWalkTests(SimpleTestCase):
    def test_grid_walk(self):
        stats = validate_walk(grid(3, 3).embedding, GRID_WALK)
        self.assertEqual(stats.length, 10)
        self.assertEqual(stats.repeats, 1)
        self.assertEqual(stats.multiplicities[1], 1)
        self.assertTrue(stats.spanning)

    def test_fig5_walk(self):
        item = fig5()
        stats = validate_walk(item.embedding, item.walks[0])
        self.assertEqual((stats.length, stats.repeats), (38, 6))
        self.assertEqual(stats.multiplicities[0], 2)

    def test_reduction_caption_walk(self):
        item = twin_octagons()
        stats = validate_walk(item.embedding, item.walks[0])
        self.assertEqual(stats.length, 22)
        self.assertEqual(stats.repeats, 4)

    def test_repeats_equal_length_minus_n(self):
        g = grid(3, 3).embedding
        stats = validate_walk(g, GRID_WALK)
        self.assertEqual(stats.repeats, stats.length - g.num_vertices)

    def test_non_adjacent_step_reports_its_index(self):
        with self.assertRaises(NonAdjacentStep) as ctx:
            validate_walk(grid(3, 3).embedding, [1, 2, 3, 5])
        self.assertEqual(ctx.exception.index, 2)

    def test_closing_step_is_checked(self):
        with self.assertRaises(NonAdjacentStep) as ctx:
            validate_walk(grid(3, 3).embedding, [1, 2, 3])
        self.assertEqual(ctx.exception.index, 2)

    def test_not_spanning(self):
        with self.assertRaises(NotSpanning) as ctx:
            validate_walk(grid(3, 3).embedding, [1, 2])
        self.assertEqual(ctx.exception.missing, (3, 4, 5, 6, 7, 8, 9))

    def test_non_spanning_walk_can_be_measured(self):
        stats = validate_walk(grid(3, 3).embedding, [1, 2], require_spanning=False)
        self.assertFalse(stats.spanning)
        self.assertEqual(stats.length, 2)
        self.assertEqual(stats.repeats, 0)

    def test_unknown_vertex(self):
        with self.assertRaises(UnknownVertex):
            validate_walk(grid(3, 3).embedding, [1, 10])

    def test_empty_walk(self):
        with self.assertRaises(InvalidWalk):
            validate_walk(grid(3, 3).embedding, [])

    def test_one_vertex_walk(self):
        stats = validate_walk(parse_embedding("p planar 1 0\n"), [1])
        self.assertEqual((stats.length, stats.repeats, stats.spanning), (0, 0, True))

    def test_edge_traversals(self):
        traversals = walk_edge_traversals(grid(3, 3).embedding, ClosedWalk(GRID_WALK))
        self.assertEqual(traversals[1], 2)
        self.assertEqual(sum(traversals.values()), 10)
        self.assertNotIn(2, traversals)


class ExactSolverTests(SimpleTestCase):
    def test_cycle(self):
        solved = hamiltonian_number_exact(cycle(6).embedding)
        self.assertEqual(solved.h, 6)
        self.assertEqual(solved.ordering.vertices, (1, 2, 3, 4, 5, 6))
        self.assertEqual(solved.walk.vertices, (1, 2, 3, 4, 5, 6))

    def test_star(self):
        self.assertEqual(hamiltonian_number_exact(star(4).embedding).h, 8)

    def test_grid(self):
        g = grid(3, 3).embedding
        solved = hamiltonian_number_exact(g)
        self.assertEqual(solved.h, 10)
        self.assertEqual(solved.ordering.cost, 10)
        stats = validate_walk(g, solved.walk)
        self.assertEqual((stats.length, stats.repeats), (10, 1))

    def test_complete_graph(self):
        self.assertEqual(hamiltonian_number_exact(k4().embedding).h, 4)

    def test_trees_need_twice_their_edges(self):
        for q in (1, 2, 5):
            with self.subTest(q=q):
                self.assertEqual(hamiltonian_number_exact(path_tree(q).embedding).h, 2 * q)

    def test_one_vertex_graph(self):
        with self.assertLogs("hamiltonian.walks", "WARNING"):
            solved = hamiltonian_number_exact(parse_embedding("p planar 1 0\n"))
        self.assertEqual(solved.h, 0)

    def test_limit(self):
        with self.assertRaises(TooLarge) as ctx:
            hamiltonian_number_exact(grid(3, 3).embedding, limit=8)
        self.assertEqual((ctx.exception.n, ctx.exception.limit), (9, 8))

    def test_default_limit_rejects_fig5(self):
        with self.assertRaises(TooLarge):
            hamiltonian_number_exact(fig5().embedding)

    @override_settings(PLANAR_SOLVE_LIMIT=8)
    def test_limit_comes_from_settings(self):
        with self.assertRaises(TooLarge):
            hamiltonian_number_exact(grid(3, 3).embedding)
        self.assertEqual(hamiltonian_number_exact(grid(3, 3).embedding, limit=9).h, 10)


class SpectrumTests(SimpleTestCase):
    def test_four_cycle(self):
        self.assertEqual(hamiltonian_spectrum(cycle(4).embedding), [4, 6])

    def test_complete_graph(self):
        self.assertEqual(hamiltonian_spectrum(k4().embedding), [4])

    def test_minimum_is_the_hamiltonian_number(self):
        for item in (grid(3, 3), star(4), cycle(6), path_tree(4)):
            with self.subTest(fixture=item.name):
                self.assertEqual(
                    hamiltonian_spectrum(item.embedding)[0],
                    hamiltonian_number_exact(item.embedding).h,
                )

    def test_limit(self):
        with self.assertRaises(TooLarge):
            hamiltonian_spectrum(path_tree(9).embedding)

    def test_small_graphs(self):
        self.assertEqual(hamiltonian_spectrum(parse_embedding("p planar 1 0\n")), [0])
        self.assertEqual(hamiltonian_spectrum(path_tree(1).embedding), [2])


class SpanningTreeWalkTests(SimpleTestCase):
    def test_lengths(self):
        self.assertEqual(spanning_tree_walk(path_tree(10).embedding).length, 20)
        self.assertEqual(spanning_tree_walk(k4().embedding).length, 6)
        self.assertEqual(spanning_tree_walk(grid(3, 3).embedding).length, 16)

    def test_walks_validate(self):
        for item in (grid(3, 3), star(4), fig5(), twin_octagons()):
            with self.subTest(fixture=item.name):
                g = item.embedding
                stats = validate_walk(g, spanning_tree_walk(g))
                self.assertEqual(stats.length, 2 * (g.num_vertices - 1))


class ExpandOrderingTests(SimpleTestCase):
    def test_legs_take_the_smallest_closer_neighbor(self):
        walk = expand_ordering(grid(3, 3).embedding, (1, 9))
        self.assertEqual(walk.vertices, (1, 2, 3, 6, 9, 6, 3, 2))
