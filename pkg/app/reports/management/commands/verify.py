from decompositions.services.model import is_connected_decomposition, is_stable, validate, width
from reports.management.base import ReportCommand
from reports.services.artifacts import load_decomposition, read_graph


class Command(ReportCommand):
    help = 'Check a decomposition: the tree-decomposition axioms, optionally connected bags and stability.'

    def add_arguments(self, parser):
        parser.add_argument('graph', help='Edge-list file.')
        parser.add_argument('decomposition', help='Decomposition JSON.')
        parser.add_argument('--connected', action='store_true', help='Require every bag to be connected.')
        parser.add_argument('--stable', action='store_true', help='Require both sides of every tree edge to be connected.')

    def run(self, *args, **options):
        g = read_graph(options['graph'])
        d = load_decomposition(g, options['decomposition'])

        report = validate(g, d)
        failures = [] if report else ['tree-decomposition axioms violated']
        if options['connected'] and not (bags := is_connected_decomposition(g, d)):
            failures.append(f'bag of node {bags.node} is disconnected')
        if options['stable'] and not (sides := is_stable(g, d)):
            failures.append(f'side of node {sides.side} across tree edge {sides.edge} is disconnected')

        fields = {'nodes': len(d.nodes), 'width': width(d) if d.nodes else None}
        self.emit(fields, ok=not failures)
        if failures:
            self.fail('verification_failed', '; '.join(failures), validation=report.describe(g), **fields)
