from decompositions.services.model import disconnection_defect, is_stable, width
from decompositions.services.stabilize import stabilize
from reports.management.base import ReportCommand
from reports.services.artifacts import dump_decomposition, load_decomposition, read_graph, write_json


class Command(ReportCommand):
    help = 'Turn a decomposition of a connected graph into a stable one of no larger width.'

    def add_arguments(self, parser):
        parser.add_argument('graph', help='Edge-list file.')
        parser.add_argument('decomposition', help='Decomposition JSON.')
        parser.add_argument('--out', help='Write the stable decomposition as JSON.')

    def run(self, *args, **options):
        g = read_graph(options['graph'])
        d = load_decomposition(g, options['decomposition'])
        stable = stabilize(g, d)
        if options['out']:
            write_json(options['out'], dump_decomposition(stable))
        self.emit({
            'defect': disconnection_defect(g, d),
            'width_before': width(d),
            'width_after': width(stable),
            'nodes': len(stable.nodes),
            'stable': bool(is_stable(g, stable)),
        })
