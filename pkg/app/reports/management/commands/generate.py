from families.services.registry import FAMILIES, generate
from graphs.services.edge_list import format_edge_list
from reports import exceptions
from reports.management.base import ReportCommand
from reports.services.artifacts import write_text


def parse_params(tokens: list[str]) -> dict[str, int]:
    params = {}
    for token in tokens:
        key, sep, value = token.partition('=')
        if not sep or not value.lstrip('-').isdigit():
            raise exceptions.InvalidArgument(detail=f'Expected key=integer, got {token!r}.')
        params[key] = int(value)
    return params


class Command(ReportCommand):
    help = 'Write a graph of one of the witness families as an edge list.'

    def add_arguments(self, parser):
        parser.add_argument('family', help=f'One of: {", ".join(FAMILIES)}.')
        parser.add_argument('params', nargs='*', help='Family parameters as key=value, e.g. n=4 k=1.')
        parser.add_argument('--out', help='Edge-list file to write; stdout when omitted.')

    def run(self, *args, **options):
        g = generate(options['family'], **parse_params(options['params']))
        text = format_edge_list(g)
        if options['out'] is None:
            self.stdout.write(text, ending='')
            return
        write_text(options['out'], text)
        self.emit({'name': g.name, 'vertices': g.order, 'edges': g.edge_count, 'out': options['out']})
