from reports.management.base import ReportCommand
from reports.services.artifacts import load_bramble, read_graph
from reports.services.report import invariant_report


class Command(ReportCommand):
    help = 'Invariants of a graph: tree-width, ell, girth, geodesic cycles, wctw bounds.'

    def add_arguments(self, parser):
        parser.add_argument('graph', help='Edge-list file.')
        parser.add_argument('--bramble', help='Bramble JSON; adds its connected order and the locality bound.')

    def run(self, *args, **options):
        g = read_graph(options['graph'])
        b = load_bramble(g, options['bramble']) if options['bramble'] else None
        self.emit(invariant_report(g, b))
