from reports.management.base import ReportCommand
from reports.services.artifacts import dump_decomposition, read_graph, write_json
from reports.services.pipeline import treewidth


class Command(ReportCommand):
    help = 'Tree-width of a graph with a decomposition of that width.'

    def add_arguments(self, parser):
        parser.add_argument('graph', help='Edge-list file.')
        parser.add_argument('--heuristic', action='store_true', help='Fall back to min-fill above the exact solver limit.')
        parser.add_argument('--out', help='Write the decomposition as JSON.')

    def run(self, *args, **options):
        g = read_graph(options['graph'])
        result = treewidth(g, heuristic=options['heuristic'])
        if options['out']:
            write_json(options['out'], dump_decomposition(result.decomposition))
        self.emit({'tw': result.value, 'method': result.method, 'nodes': len(result.decomposition.nodes)})
