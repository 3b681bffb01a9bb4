from brambles.services.bramble import connected_order, is_bramble, is_bramble_sampled, order
from brambles.services.wctw import check_connected_order_bound
from reports.management.base import ReportCommand
from reports.services.artifacts import load_bramble, read_graph

MODES = ('check', 'sampled', 'order', 'connected-order', 'bound')


class Command(ReportCommand):
    help = 'Bramble checks: touching, (connected) order and the connected-order bound.'

    def add_arguments(self, parser):
        parser.add_argument('graph', help='Edge-list file.')
        parser.add_argument('bramble', help='Bramble JSON, a list of label lists.')
        parser.add_argument('--mode', choices=MODES, default='check')
        parser.add_argument('--samples', type=int, default=1000, help='Pairs drawn in sampled mode.')
        parser.add_argument('--seed', type=int, default=None, help='Sampling seed; DEFAULT_SEED when omitted.')

    def run(self, *args, **options):
        g = read_graph(options['graph'])
        b = load_bramble(g, options['bramble'])
        mode = options['mode']

        if mode in ('check', 'sampled'):
            if mode == 'check':
                check = is_bramble(g, b)
            else:
                check = is_bramble_sampled(g, b.elements, options['samples'], options['seed'])
            fields = {'elements': len(b), 'element': check.element, 'pair': check.pair}
            self.emit(fields, ok=check.ok)
            if not check:
                self.fail('not_a_bramble', 'Vertex sets do not form a bramble.', **fields)
        elif mode == 'bound':
            report = check_connected_order_bound(g, b)
            self.emit(report)
            if not report['holds']:
                self.fail('bound_violated', 'Connected order exceeds tw * floor(ell / 2) + 1.', **report)
        else:
            value, witness = (order if mode == 'order' else connected_order)(g, b)
            self.emit({mode.replace('-', '_'): value, 'witness': g.labels(witness)})
