from decompositions.services.model import width
from reports.management.base import ReportCommand
from reports.services.artifacts import dump_decomposition, dump_trace, load_decomposition, read_graph, write_json
from reports.services.pipeline import connectify_given


class Command(ReportCommand):
    help = 'Run the path-addition construction on a decomposition of a connected graph.'

    def add_arguments(self, parser):
        parser.add_argument('graph', help='Edge-list file.')
        parser.add_argument('decomposition', help='Decomposition JSON; stabilised and rooted at its smallest node if needed.')
        parser.add_argument('--out', help='Write the connected decomposition as JSON.')
        parser.add_argument('--trace', help='Write the path additions as JSON.')

    def run(self, *args, **options):
        g = read_graph(options['graph'])
        d = load_decomposition(g, options['decomposition'])
        out, trace = connectify_given(g, d)
        if options['out']:
            write_json(options['out'], dump_decomposition(out))
        if options['trace']:
            write_json(options['trace'], dump_trace(g, trace))
        self.emit({
            'width_before': width(d),
            'width': width(out),
            'additions': len(trace),
        })
