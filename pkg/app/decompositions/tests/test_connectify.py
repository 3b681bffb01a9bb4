from django.test import SimpleTestCase
from hypothesis import given, settings

from cycles.services.cycle_space import ell
from decompositions import exceptions
from decompositions.serializers import DecompositionSerializer, PathAdditionSerializer
from decompositions.services.connectify import (
    ConstructionState,
    apply_update,
    bound_report,
    check_invariants,
    connectify_graph,
    find_admissible_path,
    run_construction,
    size_bounds,
    widths_by_root,
)
from decompositions.services.model import is_connected_decomposition, is_stable, reroot, validate, width
from decompositions.services.stabilize import stabilize
from decompositions.services.treewidth import exact_treewidth
from decompositions.tests.fixtures import C6, K4, bag_labels, c6_path_tree, labelled
from graphs.services.edge_list import parse_edge_list
from graphs.services.graph import Path
from graphs.tests.strategies import connected_graphs


def path_labels(g, path):
    return [g.label(v) for v in path]


def c4_star():
    """C4 rooted at {1,3} with leaves {1,2,3} and {1,3,4}."""
    g = parse_edge_list('1 2\n2 3\n3 4\n4 1\n')
    return g, labelled(g, {1: '13', 2: '123', 3: '134'}, [(1, 2), (1, 3)], root=1)


class AdmissiblePathTests(SimpleTestCase):
    def test_cycle_fixture(self):
        g, d = c6_path_tree()
        path = find_admissible_path(g, ConstructionState(g, d), 2)

        self.assertEqual(path_labels(g, path), ['2', '3', '4', '5'])

    def test_connected_bag(self):
        g, d = c6_path_tree()

        with self.assertRaises(exceptions.BagAlreadyConnected):
            find_admissible_path(g, ConstructionState(g, d), 1)

    def test_unrooted_state(self):
        g, d = c6_path_tree(root=None)

        with self.assertRaises(exceptions.NotRooted):
            ConstructionState(g, d)


class ApplyUpdateTests(SimpleTestCase):
    def test_cycle_fixture_trace(self):
        g, d = c6_path_tree()
        state = ConstructionState(g, d)
        path = Path(tuple(g.vertex(label) for label in '2345'))

        self.assertEqual([state.bookkeeping[u].component_count for u in (2, 3, 4)], [3, 3, 3])
        apply_update(state, 2, path)

        self.assertEqual(
            bag_labels(state.working),
            {1: {'1', '2', '6'}, 2: {'2', '3', '4', '5', '6'}, 3: {'2', '3', '4', '5'}, 4: {'3', '4', '5'}},
        )
        self.assertEqual([state.bookkeeping[u].component_count for u in (2, 3, 4)], [2, 1, 1])
        self.assertEqual(
            {(g.label(a), g.label(b)) for a, b in state.bookkeeping[2].edges},
            {('2', '3'), ('3', '4'), ('4', '5')},
        )
        addition = state.trace[-1]
        self.assertEqual((addition.node, addition.child), (2, 3))
        self.assertEqual((addition.components_before, addition.components_after), (2, 1))
        self.assertTrue(validate(g, state.working))
        self.assertTrue(is_stable(g, state.working))
        self.assertTrue(check_invariants(state))

    def test_length_two_path_adds_one_vertex(self):
        g, d = c4_star()
        state = ConstructionState(g, d)
        path = find_admissible_path(g, state, 1)
        apply_update(state, 1, path)

        self.assertEqual(path_labels(g, path), ['1', '2', '3'])
        self.assertEqual(bag_labels(state.working)[1], {'1', '2', '3'})
        self.assertEqual(state.trace[-1].child, 2)

    def test_untouched_subtree_keeps_bag_and_forest(self):
        g, d = c4_star()
        state = ConstructionState(g, d)
        apply_update(state, 1, find_admissible_path(g, state, 1))

        self.assertEqual(state.working.bag(3), d.bag(3))
        self.assertEqual(state.bookkeeping[3].edges, set())
        self.assertEqual(state.bookkeeping[3].component_count, 3)


class InvariantReportTests(SimpleTestCase):
    def test_initial_forests_are_edgeless(self):
        g, d = c6_path_tree()
        state = ConstructionState(g, d)

        self.assertTrue(check_invariants(state))
        for u in d.nodes:
            self.assertEqual(state.bookkeeping[u].edges, set())
            self.assertEqual(state.bookkeeping[u].component_count, len(d.bag(u)))

    def test_injected_cycle_is_reported(self):
        g, d = c6_path_tree()
        state = ConstructionState(g, d)
        one, two, six = (g.vertex(label) for label in '126')
        forest = state.bookkeeping[1]
        forest.add_edge(one, two)
        forest.add_edge(two, six)
        forest.add_edge(six, one)

        report = check_invariants(state)
        self.assertFalse(report)
        self.assertFalse(report.acyclic)
        self.assertEqual(len(report.failures), 1)


class RunConstructionTests(SimpleTestCase):
    def test_cycle_fixture(self):
        g, d = c6_path_tree()
        out, trace = run_construction(g, d)

        self.assertEqual(width(out), 4)
        self.assertEqual(len(trace), 1)
        self.assertEqual(path_labels(g, trace[0].path), ['2', '3', '4', '5'])
        self.assertTrue(is_connected_decomposition(g, out))
        self.assertLessEqual(width(out), 2 * (ell(g) - 2))

    def test_connected_input_is_unchanged(self):
        g = parse_edge_list(K4)
        d = labelled(g, {1: '1234'}, root=1)
        out, trace = run_construction(g, d)

        self.assertEqual(out, d)
        self.assertEqual(trace, [])

    def test_unstable_input_is_rejected(self):
        g = parse_edge_list('a b\nb c\nc d\n')

        with self.assertRaises(exceptions.UnstableDecomposition):
            run_construction(g, labelled(g, {1: 'ad', 2: 'abcd'}, [(1, 2)], root=1))

    def test_size_bounds_of_fixture(self):
        g, d = c6_path_tree()
        _, trace = run_construction(g, d)

        self.assertEqual(size_bounds(d, trace), {1: 3, 2: 7, 3: 7, 4: 7})

    @settings(max_examples=100, deadline=None, derandomize=True)
    @given(g=connected_graphs(max_vertices=12))
    def test_random_graphs(self, g):
        k, seed = exact_treewidth(g)
        stable = stabilize(g, seed)
        d = reroot(stable, min(stable.nodes))
        out, trace = run_construction(g, d)

        self.assertEqual(out.edges, d.edges)
        self.assertTrue(all(d.bag(t) <= out.bag(t) for t in d.nodes))
        self.assertTrue(is_connected_decomposition(g, out))
        for t in d.nodes:
            self.assertLessEqual(sum(1 for a in trace if a.node == t), max(len(d.bag(t)) - 1, 0))
        if g.edge_count >= g.order:
            length = ell(g)
            self.assertTrue(all(a.path.length <= length - 2 for a in trace))
            self.assertLessEqual(width(out), k * (length - 2))


class PipelineTests(SimpleTestCase):
    def test_components_are_joined(self):
        g = parse_edge_list(C6 + 'a b\nb c\nc d\nd a\na c\nb d\n')
        d, trace = connectify_graph(g)

        self.assertTrue(validate(g, d))
        self.assertTrue(is_connected_decomposition(g, d))
        separate = [width(connectify_graph(parse_edge_list(text))[0]) for text in (C6, K4)]
        self.assertEqual(width(d), max(separate))
        for addition in trace:
            addition.path.check(g)

    def test_widths_by_root(self):
        g, d = c6_path_tree()
        widths = widths_by_root(g, d)

        self.assertEqual(set(widths), {1, 2, 3, 4})
        self.assertEqual(widths[1], 4)
        self.assertTrue(all(2 <= w <= 8 for w in widths.values()))

    def test_bound_report(self):
        self.assertEqual(bound_report(2, 6, 4), {'tw': 2, 'ell': 6, 'width': 4, 'bound': 8, 'holds': True})
        self.assertFalse(bound_report(2, 3, 4)['holds'])
        self.assertIsNone(bound_report(1, None, 1)['bound'])


class SerializerTests(SimpleTestCase):
    def test_decomposition_json(self):
        g, d = c6_path_tree()
        data = DecompositionSerializer(d).data

        self.assertEqual(data['graph'], g.fingerprint)
        self.assertEqual(data['nodes'][1], {'id': 2, 'bag': ['2', '5', '6']})
        self.assertEqual(data['edges'], [[1, 2], [2, 3], [3, 4]])

        serializer = DecompositionSerializer(data=data, context={'graph': g})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), d)

    def test_foreign_graph_is_rejected(self):
        g, d = c6_path_tree()
        data = dict(DecompositionSerializer(d).data, graph='0' * 16)
        serializer = DecompositionSerializer(data=data, context={'graph': g})

        self.assertFalse(serializer.is_valid())
        self.assertIn('graph', serializer.errors)

    def test_unknown_label_is_rejected(self):
        g, d = c6_path_tree()
        data = DecompositionSerializer(d).data
        data['nodes'][0]['bag'] = ['1', '2', 'z']
        serializer = DecompositionSerializer(data=data, context={'graph': g})

        self.assertFalse(serializer.is_valid())

    def test_trace_json(self):
        g, d = c6_path_tree()
        _, trace = run_construction(g, d)
        data = PathAdditionSerializer(trace, many=True, context={'graph': g}).data

        self.assertEqual(
            [dict(item) for item in data],
            [{'node': 2, 'path': ['2', '3', '4', '5'], 'child': 3, 'components_before': 2, 'components_after': 1}],
        )
