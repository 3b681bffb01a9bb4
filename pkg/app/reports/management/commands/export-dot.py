from reports.management.base import ReportCommand
from reports.services.artifacts import load_decomposition, load_trace, read_graph, write_text
from reports.services.dot import render_decomposition, render_graph


class Command(ReportCommand):
    help = 'Render a decomposition tree, or the graph itself, as Graphviz DOT.'

    def add_arguments(self, parser):
        parser.add_argument('graph', help='Edge-list file.')
        parser.add_argument('decomposition', nargs='?', help='Decomposition JSON; the graph is drawn when omitted.')
        parser.add_argument('--trace', help='Trace JSON whose path vertices are highlighted.')
        parser.add_argument('--out', help='DOT file to write; stdout when omitted.')

    def run(self, *args, **options):
        g = read_graph(options['graph'])
        overlay = load_trace(g, options['trace']) if options['trace'] else []
        if options['decomposition']:
            text = render_decomposition(load_decomposition(g, options['decomposition']), overlay)
        else:
            text = render_graph(g, (v for _, path in overlay for v in path))
        if options['out']:
            write_text(options['out'], text)
        else:
            self.stdout.write(text, ending='')
