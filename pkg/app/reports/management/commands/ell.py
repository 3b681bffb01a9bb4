from cycles.services.cycle_space import cyclomatic_number, ell, ell_via_min_basis
from cycles.services.geodesic import girth
from reports.management.base import ReportCommand
from reports.services.artifacts import read_graph


class Command(ReportCommand):
    help = 'Smallest cycle length whose cycles generate the cycle space.'

    def add_arguments(self, parser):
        parser.add_argument('graph', help='Edge-list file.')
        parser.add_argument('--basis', action='store_true', help='Cross-check with a minimum cycle basis.')

    def run(self, *args, **options):
        g = read_graph(options['graph'])
        fields = {'ell': ell(g), 'cyclomatic': cyclomatic_number(g), 'girth': girth(g)}
        if not options['basis']:
            self.emit(fields)
            return
        fields['ell_basis'] = ell_via_min_basis(g)
        self.emit(fields, ok=fields['ell'] == fields['ell_basis'])
        if fields['ell'] != fields['ell_basis']:
            self.fail('ell_mismatch', 'Rank search and minimum cycle basis disagree.', **fields)
