from pathlib import Path

from django.conf import settings

from reports.management.base import ReportCommand
from reports.services.artifacts import dump_decomposition, dump_trace, load_decomposition, read_graph, write_json
from reports.services.pipeline import run_pipeline


class Command(ReportCommand):
    help = 'Tree-width, stabilisation and construction, checked against tw * (ell - 2).'

    def add_arguments(self, parser):
        parser.add_argument('graph', help='Edge-list file.')
        parser.add_argument('--decomposition', help='Start from this decomposition JSON instead of an optimal one.')
        parser.add_argument('--heuristic', action='store_true', help='Use min-fill above the exact solver limit.')
        parser.add_argument('--out', help='Connected decomposition JSON; defaults to ARTIFACT_DIR/<graph>.connected.json.')
        parser.add_argument('--trace', help='Write the path additions as JSON.')

    def run(self, *args, **options):
        g = read_graph(options['graph'])
        given = load_decomposition(g, options['decomposition']) if options['decomposition'] else None
        result = run_pipeline(g, given, heuristic=options['heuristic'])

        out = options['out'] or Path(settings.ARTIFACT_DIR) / f'{g.name}.connected.json'
        write_json(out, dump_decomposition(result.decomposition))
        if options['trace']:
            write_json(options['trace'], dump_trace(g, result.trace))

        fields = result.fields()
        if result.method != 'exact':
            fields['method'] = result.method
        self.emit(fields, ok=result.holds)
        if not result.holds:
            self.fail('bound_violated', f'Connected width {result.achieved} exceeds the bound {result.bound}.', **fields)
