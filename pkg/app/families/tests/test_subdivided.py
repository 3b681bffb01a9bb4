from itertools import combinations

from django.test import SimpleTestCase

from brambles.services.bramble import is_bramble, touches
from cycles.services.cycle_space import ell
from cycles.services.geodesic import is_geodesic_cycle
from decompositions.services.connectify import connectify_graph
from decompositions.services.model import is_connected_decomposition, validate, width
from decompositions.services.treewidth import exact_treewidth
from families import exceptions
from families.services.subdivided import (
    branch_path,
    branch_vertices,
    complete_graph,
    cycle_graph,
    grid_boundary_cycle,
    lower_bound_component,
    subdivided_complete,
    subdivided_complete_lower_bound_bramble,
    subdivided_complete_witness,
    subdivided_grid,
    witness_width,
)
from graphs.services.traversal import enumerate_connected_sets, is_connected


class SmallGraphTests(SimpleTestCase):
    def test_cycle(self):
        g = cycle_graph(6)

        self.assertEqual((g.order, g.edge_count), (6, 6))
        self.assertTrue(all(g.degree(v) == 2 for v in g.vertices))

    def test_complete(self):
        g = complete_graph(4)

        self.assertEqual((g.order, g.edge_count), (4, 6))
        self.assertEqual(complete_graph(3).edges, cycle_graph(3).edges)

    def test_invalid_sizes(self):
        with self.assertRaises(exceptions.InvalidParameters):
            cycle_graph(2)
        with self.assertRaises(exceptions.InvalidParameters):
            complete_graph(0)


class SubdividedCompleteTests(SimpleTestCase):
    def test_counts(self):
        for n, k in [(3, 1), (4, 1), (4, 0), (5, 2), (6, 3)]:
            g = subdivided_complete(n, k)
            pairs = n * (n - 1) // 2
            self.assertEqual(g.order, n + k * pairs)
            self.assertEqual(g.edge_count, (k + 1) * pairs)

    def test_three_branches_once_subdivided_is_c6(self):
        g = subdivided_complete(3, 1)

        self.assertEqual((g.order, g.edge_count), (6, 6))
        self.assertTrue(all(g.degree(v) == 2 for v in g.vertices))

    def test_no_subdivision_is_complete(self):
        g = subdivided_complete(4, 0)

        self.assertEqual((g.order, g.edge_count), (4, 6))
        self.assertEqual(g.labels(branch_vertices(g)), ['a_1', 'a_2', 'a_3', 'a_4'])

    def test_branch_path(self):
        self.assertEqual(branch_path(2, 1, 3), ['a_1', 's_1_3_1', 's_1_3_2', 'a_3'])
        self.assertEqual(branch_path(2, 3, 1), ['a_3', 's_1_3_2', 's_1_3_1', 'a_1'])

    def test_invalid_parameters(self):
        with self.assertRaises(exceptions.InvalidParameters):
            subdivided_complete(2, 1)
        with self.assertRaises(exceptions.InvalidParameters):
            subdivided_complete(4, -1)

    def test_invariants_within_solver_limits(self):
        for n, k in [(3, 0), (3, 1), (3, 5), (4, 0), (4, 1), (4, 2), (5, 0), (5, 1), (6, 0)]:
            g = subdivided_complete(n, k)
            self.assertEqual(ell(g), 3 * (k + 1))
            self.assertEqual(exact_treewidth(g)[0], n - 1)


class WitnessTests(SimpleTestCase):
    def test_widths(self):
        self.assertEqual(witness_width(3, 1), 3)
        self.assertEqual(witness_width(4, 1), 5)
        self.assertEqual(witness_width(4, 2), 8)

    def test_two_node_witness(self):
        g, d = subdivided_complete_witness(3, 1)

        self.assertEqual(len(d.nodes), 2)
        self.assertEqual([len(d.bag(t)) for t in d.nodes], [4, 4])
        self.assertEqual(width(d), 3)

    def test_witnesses(self):
        for n, k in [(3, 1), (3, 2), (4, 1), (4, 2), (5, 1), (5, 2)]:
            g, d = subdivided_complete_witness(n, k)
            self.assertTrue(validate(g, d))
            self.assertTrue(is_connected_decomposition(g, d))
            self.assertEqual(width(d), witness_width(n, k))
            self.assertEqual(d.root, 0)
            self.assertEqual(len(d.nodes), 2 + (n - 2) * (n - 3) // 2)

    def test_pipeline_on_small_parameters(self):
        for n in (3, 4, 5):
            for k in (1, 2):
                g = subdivided_complete(n, k)
                self.assertEqual(exact_treewidth(g)[0], n - 1)
                self.assertEqual(ell(g), 3 * (k + 1))
                d, _ = connectify_graph(g)
                self.assertTrue(is_connected_decomposition(g, d))
                self.assertLessEqual(width(d), (n - 1) * (3 * k + 1))


class LowerBoundBrambleTests(SimpleTestCase):
    def test_components_touch(self):
        g, b = subdivided_complete_lower_bound_bramble(4, 1)

        self.assertTrue(is_bramble(g, b))
        self.assertTrue(all(branch_vertices(g) - x <= lower_bound_component(g, x)
                            for x in enumerate_connected_sets(g, 2)))

    def test_exhaustive_pairs(self):
        g = subdivided_complete(4, 1)
        blocks = {}
        for x in enumerate_connected_sets(g, witness_width(4, 1)):
            blocks.setdefault(lower_bound_component(g, x), x)

        for a, b in combinations(blocks, 2):
            self.assertTrue(touches(g, a, b), f'{g.labels(blocks[a])} / {g.labels(blocks[b])}')

    def test_split_branch_vertices(self):
        g = subdivided_complete(3, 1)

        with self.assertRaises(exceptions.WitnessConstructionFailed):
            lower_bound_component(g, g.vertices_of(['s_1_2_1', 's_1_3_1', 's_2_3_1']))


class SubdividedGridTests(SimpleTestCase):
    def test_two_by_two_is_c4(self):
        g = subdivided_grid(2)

        self.assertEqual((g.order, g.edge_count), (4, 4))
        self.assertTrue(all(g.degree(v) == 2 for v in g.vertices))

    def test_three_by_three(self):
        g = subdivided_grid(3)

        self.assertEqual(g.order, 9 + 4)
        self.assertEqual(g.edge_count, 8 + 4 * 2)
        self.assertTrue(is_connected(g))

    def test_boundary_cycle(self):
        for n in (2, 3, 4, 5):
            g = subdivided_grid(n)
            boundary = grid_boundary_cycle(g, n)
            self.assertEqual(boundary.length, 4 * (n - 1))
            self.assertTrue(is_geodesic_cycle(g, boundary))

    def test_invalid_size(self):
        with self.assertRaises(exceptions.InvalidParameters):
            subdivided_grid(1)
