import json
import tempfile
from io import StringIO
from pathlib import Path
from unittest.mock import patch

from django.core.management import CommandError, call_command
from django.test import SimpleTestCase, override_settings

from decompositions.tests.fixtures import C6, K4, P4, c6_path_tree, labelled
from graphs.services.edge_list import parse_edge_list
from reports.services.artifacts import dump_decomposition, read_json, write_json

TREE = '1 2\n2 3\n2 4\n'
GRID3 = ''.join(
    f'{r}_{c} {r}_{c + 1}\n' for r in range(3) for c in range(2)
) + ''.join(f'{r}_{c} {r + 1}_{c}\n' for r in range(2) for c in range(3))
C6_ARCS = [['1', '2', '3'], ['2', '3', '4'], ['3', '4', '5'], ['4', '5', '6'], ['5', '6', '1'], ['6', '1', '2']]


class CommandTestCase(SimpleTestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        self.dir = Path(self.tmp.name)
        artifacts = override_settings(ARTIFACT_DIR=self.dir / 'artifacts')
        artifacts.enable()
        self.addCleanup(artifacts.disable)

    def file(self, name, text):
        path = self.dir / name
        path.write_text(text, encoding='utf-8')
        return str(path)

    def json_file(self, name, data):
        return str(write_json(self.dir / name, data))

    def call(self, *args, **options):
        out = StringIO()
        call_command(*args, stdout=out, **options)
        return out.getvalue().strip()

    def call_failing(self, returncode, *args, **options):
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command(*args, stdout=out, **options)
        self.assertEqual(ctx.exception.returncode, returncode)
        return out.getvalue().strip()


class PipelineCommandTests(CommandTestCase):
    def test_c6_fixture(self):
        graph = self.file('c6.txt', C6)
        _, d = c6_path_tree()
        decomposition = self.json_file('c6.json', dump_decomposition(d))
        trace = str(self.dir / 'trace.json')

        out = self.call('pipeline', graph, decomposition=decomposition, trace=trace)

        self.assertEqual(out, 'tw=2 ell=6 bound=8 achieved=4 OK')
        self.assertEqual(
            read_json(trace),
            [{'node': 2, 'path': ['2', '3', '4', '5'], 'child': 3, 'components_before': 2, 'components_after': 1}],
        )
        written = read_json(self.dir / 'artifacts' / 'c6.connected.json')
        self.assertEqual({n['id']: sorted(n['bag']) for n in written['nodes']}[2], ['2', '3', '4', '5', '6'])

    def test_k4(self):
        self.assertEqual(self.call('pipeline', self.file('k4.txt', K4)), 'tw=3 ell=3 bound=3 achieved=3 OK')

    def test_subdivided_complete(self):
        graph = str(self.dir / 'sk.txt')
        self.call('generate', 'subdivided-complete', 'n=4', 'k=1', out=graph)

        data = json.loads(self.call('pipeline', graph, json=True))

        self.assertEqual((data['tw'], data['ell'], data['bound']), (3, 6, 12))
        self.assertTrue(data['ok'])

    def test_forest(self):
        self.assertEqual(self.call('pipeline', self.file('tree.txt', TREE)), 'tw=1 ell=none bound=none achieved=1 OK')

    def test_missing_file(self):
        self.call_failing(2, 'pipeline', str(self.dir / 'missing.txt'))

    def test_malformed_edge_list(self):
        self.call_failing(2, 'pipeline', self.file('bad.txt', '1 2 3\n'))

    def test_invalid_utf8_edge_list(self):
        path = self.dir / 'latin.txt'
        path.write_bytes(b'1 2\n2 \xff\n')

        self.call_failing(2, 'ell', str(path))
        self.call_failing(2, 'pipeline', str(path))

    def test_empty_graph(self):
        out = self.call('pipeline', self.file('empty.txt', '# no edges\n'))

        self.assertEqual(out, 'tw=none ell=none bound=none achieved=none OK')

    def test_decomposition_of_another_graph(self):
        _, d = c6_path_tree()
        decomposition = self.json_file('c6.json', dump_decomposition(d))

        self.call_failing(2, 'pipeline', self.file('k4.txt', K4), decomposition=decomposition)

    @override_settings(TREEWIDTH_EXACT_LIMIT=4)
    def test_solver_limit_needs_heuristic(self):
        graph = self.file('grid.txt', GRID3)

        self.call_failing(2, 'pipeline', graph)
        out = self.call('pipeline', graph, heuristic=True)
        self.assertIn(' ell=4 ', out)
        self.assertTrue(out.endswith('method=minfill OK'))


class RoundTripTests(CommandTestCase):
    def test_generate_pipeline_verify(self):
        for family in ('cycle', 'complete', 'subdivided-complete', 'subdivided-grid'):
            graph = str(self.dir / f'{family}.txt')
            decomposition = str(self.dir / f'{family}.json')
            self.call('generate', family, out=graph)
            self.assertTrue(self.call('pipeline', graph, out=decomposition).endswith('OK'), family)
            self.assertEqual(self.call('verify', graph, decomposition, connected=True).split()[-1], 'OK')


class GenerateCommandTests(CommandTestCase):
    def test_stdout(self):
        out = self.call('generate', 'cycle', 'm=4')

        self.assertEqual(out.splitlines(), ['# C4', '1 2', '1 4', '2 3', '3 4'])

    def test_counts(self):
        graph = str(self.dir / 'sk.txt')
        out = self.call('generate', 'subdivided-complete', 'n=4', 'k=1', out=graph)

        self.assertIn('vertices=10 edges=12', out)
        self.assertEqual(parse_edge_list(Path(graph).read_text()).order, 10)

    def test_unknown_family(self):
        self.call_failing(2, 'generate', 'petersen')

    def test_bad_parameter(self):
        self.call_failing(2, 'generate', 'cycle', 'm=six')


class SmallCommandTests(CommandTestCase):
    def test_tw(self):
        decomposition = str(self.dir / 'tw.json')
        out = self.call('tw', self.file('c6.txt', C6), out=decomposition)

        self.assertTrue(out.startswith('tw=2 method=exact'))
        self.assertEqual(read_json(decomposition)['graph'], parse_edge_list(C6).fingerprint)

    def test_ell(self):
        graph = self.file('c6.txt', C6)

        self.assertEqual(self.call('ell', graph), 'ell=6 cyclomatic=1 girth=6')
        self.assertEqual(self.call('ell', graph, basis=True), 'ell=6 cyclomatic=1 girth=6 ell_basis=6 OK')

    def test_ell_internal_error_exits_with_diagnostic(self):
        graph = self.file('c6.txt', C6)

        with patch('cycles.services.cycle_space._cycles_of_length', return_value=iter(())):
            out = self.call_failing(1, 'ell', graph)

        self.assertEqual(json.loads(out.splitlines()[-1])['error'], 'cycle_space_incomplete')

    def test_ell_of_forest(self):
        self.call_failing(2, 'ell', self.file('tree.txt', TREE))

    def test_stabilize(self):
        g = parse_edge_list(P4)
        decomposition = self.json_file('p4.json', dump_decomposition(labelled(g, {1: 'ad', 2: 'abcd'}, [(1, 2)])))

        data = json.loads(self.call('stabilize', self.file('p4.txt', P4), decomposition, json=True))

        self.assertEqual((data['width_after'], data['nodes'], data['stable']), (3, 1, True))

    def test_connectify(self):
        _, d = c6_path_tree()
        decomposition = self.json_file('c6.json', dump_decomposition(d))

        out = self.call('connectify', self.file('c6.txt', C6), decomposition)

        self.assertEqual(out, 'width_before=2 width=4 additions=1')


class VerifyCommandTests(CommandTestCase):
    def test_stable_fixture(self):
        _, d = c6_path_tree()
        decomposition = self.json_file('c6.json', dump_decomposition(d))

        self.assertEqual(self.call('verify', self.file('c6.txt', C6), decomposition, stable=True), 'nodes=4 width=2 OK')

    def test_disconnected_bags(self):
        _, d = c6_path_tree()
        decomposition = self.json_file('c6.json', dump_decomposition(d))

        out = self.call_failing(1, 'verify', self.file('c6.txt', C6), decomposition, connected=True)

        diagnostic = json.loads(out.splitlines()[-1])
        self.assertEqual(diagnostic['error'], 'verification_failed')
        self.assertTrue(diagnostic['validation']['valid'])

    def test_invalid_decomposition(self):
        g = parse_edge_list(C6)
        decomposition = self.json_file('bad.json', dump_decomposition(labelled(g, {1: '123', 2: '345'}, [(1, 2)])))

        out = self.call_failing(1, 'verify', self.file('c6.txt', C6), decomposition)

        diagnostic = json.loads(out.splitlines()[-1])
        self.assertEqual(diagnostic['validation']['uncovered_vertices'], ['6'])

    def test_invalid_json(self):
        self.call_failing(2, 'verify', self.file('c6.txt', C6), self.file('bad.json', '{"graph": '))


class BrambleCommandTests(CommandTestCase):
    def test_check(self):
        out = self.call('bramble', self.file('c6.txt', C6), self.json_file('arcs.json', C6_ARCS))

        self.assertEqual(out, 'elements=6 element=none pair=none OK')

    def test_connected_order(self):
        out = self.call('bramble', self.file('c6.txt', C6), self.json_file('arcs.json', C6_ARCS), mode='connected-order')

        self.assertTrue(out.startswith('connected_order=4 witness='))

    def test_order(self):
        out = self.call('bramble', self.file('c6.txt', C6), self.json_file('arcs.json', C6_ARCS), mode='order')

        self.assertTrue(out.startswith('order=2 witness='))

    def test_bound(self):
        data = json.loads(self.call(
            'bramble', self.file('c6.txt', C6), self.json_file('arcs.json', C6_ARCS), mode='bound', json=True,
        ))

        self.assertEqual(data, {'connected_order': 4, 'tw': 2, 'ell': 6, 'bound': 7, 'holds': True})

    def test_sampled(self):
        out = self.call('bramble', self.file('c6.txt', C6), self.json_file('arcs.json', C6_ARCS), mode='sampled', seed=7)

        self.assertTrue(out.endswith('OK'))

    def test_not_a_bramble(self):
        out = self.call_failing(1, 'bramble', self.file('c6.txt', C6), self.json_file('b.json', [['1'], ['4']]))

        self.assertEqual(json.loads(out.splitlines()[-1])['pair'], [0, 1])

    def test_unknown_label(self):
        self.call_failing(2, 'bramble', self.file('c6.txt', C6), self.json_file('b.json', [['1'], ['9']]))


class ReportCommandTests(CommandTestCase):
    def test_c6(self):
        data = json.loads(self.call('report', self.file('c6.txt', C6), json=True))

        self.assertEqual((data['tw'], data['ell'], data['girth']), (2, 6, 6))
        self.assertEqual(data['connected_order_bound'], 7)
        self.assertEqual(data['wctw_lower'], 3)
        self.assertLessEqual(data['wctw_upper'], 6)
        self.assertEqual(len(data['longest_geodesic_cycle']), 6)

    def test_k4(self):
        out = self.call('report', self.file('k4.txt', K4))

        self.assertIn('connected_order_bound=4', out)
        self.assertIn('wctw_upper=3', out)

    def test_forest(self):
        out = self.call('report', self.file('tree.txt', TREE))

        self.assertIn('ell=none', out)
        self.assertIn('no cycle: ell undefined', out)

    def test_bramble_adds_locality_bound(self):
        data = json.loads(self.call(
            'report', self.file('c6.txt', C6), bramble=self.json_file('arcs.json', C6_ARCS), json=True,
        ))

        self.assertEqual((data['bramble_connected_order'], data['locality_bound']), (4, 12))


class ExportDotCommandTests(CommandTestCase):
    def test_decomposition_with_trace(self):
        graph = self.file('c6.txt', C6)
        _, d = c6_path_tree()
        decomposition = self.json_file('c6.json', dump_decomposition(d))
        trace = str(self.dir / 'trace.json')
        connected = str(self.dir / 'connected.json')
        self.call('connectify', graph, decomposition, out=connected, trace=trace)

        out = self.call('export-dot', graph, connected, trace=trace)

        self.assertTrue(out.startswith('graph "c6" {'))
        self.assertIn('t2 [label="t2: 2, 3, 4, 5, 6", style=filled', out)
        self.assertIn('t1 -- t2;', out)

    def test_graph(self):
        out = self.call('export-dot', self.file('k4.txt', K4))

        self.assertEqual(out.count(' -- '), 6)
        self.assertNotIn('filled', out)
