from django.core.management.base import BaseCommand

from core.commands import add_actions, command_errors, validated
from core.qcore import q_exponential_E, q_exponential_product, q_pochhammer_k
from distributions.densities import fallback_cdf, moment
from distributions.serializers import KBetaSerializer, KGammaSerializer, QParamsSerializer
from distributions.special import beta_qk, gamma_q, gamma_qk

GAMMA_METHODS = ['closed_form', 'closed', 'infinite_product', 'product', 'series', 'q_integral', 'integral']
BETA_METHODS = ['gamma_ratio', 'ratio', 'closed_form', 'closed', 'q_integral', 'integral']


class Command(BaseCommand):
    help = 'Evaluate a q-special function, q,k-density or CDF at one point'

    def add_arguments(self, parser):
        # --s must match exactly here, else it is an ambiguous prefix of --settings and --skip-checks
        parser.add_argument('--s', type=float, help='Second shape (beta targets only)')
        add = add_actions(parser, dest='target')

        gamma = add('gamma', help='Gamma_{q,k}(t)')
        self._shape_args(gamma)
        gamma.add_argument('--method', choices=GAMMA_METHODS, default='closed_form')

        gamma_q_parser = add('gamma-q', help='Gamma_q(t)')
        gamma_q_parser.add_argument('--q', type=float, required=True)
        gamma_q_parser.add_argument('--t', type=float, required=True)
        gamma_q_parser.add_argument('--method', choices=['closed_form', 'q_integral', 'integral'],
                                    default='closed_form')

        beta = add('beta', help='B_{q,k}(t, s)')
        self._shape_args(beta, with_s=True)
        beta.add_argument('--method', choices=BETA_METHODS, default='gamma_ratio')

        for name, with_s in (('density-gamma', False), ('density-beta', True)):
            density = add(name, help=f'{name} at --x')
            self._shape_args(density, with_s=with_s)
            density.add_argument('--x', type=float, required=True)

        for name, with_s in (('cdf-gamma', False), ('cdf-beta', True)):
            cdf = add(name, help=f'{name} at --x')
            self._shape_args(cdf, with_s=with_s)
            cdf.add_argument('--x', type=float, required=True)
            cdf.add_argument('--method', choices=['series', 'jackson'],
                             help='Default: the series, or the Jackson sum where it cancels')

        moment_parser = add('moment', help='Jackson moment E[X^{nk}] of the q,k-gamma law')
        self._shape_args(moment_parser)
        moment_parser.add_argument('--n', type=int, required=True)

        pochhammer = add('pochhammer', help='[t]_{n,k}')
        self._shape_args(pochhammer)
        pochhammer.add_argument('--n', type=int, required=True)

        exp = add('exp', help='E_q^x')
        exp.add_argument('--q', type=float, required=True)
        exp.add_argument('--x', type=float, required=True)
        exp.add_argument('--method', choices=['series', 'product'], default='series')

    @staticmethod
    def _shape_args(parser, with_s=False):
        parser.add_argument('--q', type=float, required=True, help='0 <= q < 1')
        parser.add_argument('--k', type=float, required=True, help='k > 0')
        parser.add_argument('--t', type=float, required=True, help='t > 0')
        if with_s:
            parser.add_argument('--s', type=float, required=True, help='s > 0')

    def handle(self, *args, **options):
        with command_errors():
            value = self._evaluate(options['target'], options)
        self.stdout.write('%.15g' % value)

    def _evaluate(self, target, options):
        shape = {key: options.get(key) for key in ('q', 'k', 't', 's') if options.get(key) is not None}

        if target == 'exp':
            params = validated(QParamsSerializer, {'q': options['q'], 'k': 1}).params()
            evaluate = q_exponential_product if options['method'] == 'product' else q_exponential_E
            return evaluate(options['x'], params.q)

        if target == 'gamma-q':
            validated(KGammaSerializer, {**shape, 'k': 1})
            return gamma_q(options['t'], options['q'], method=options['method'])

        if target in ('beta', 'density-beta', 'cdf-beta'):
            dist = validated(KBetaSerializer, shape).save()
        else:
            dist = validated(KGammaSerializer, shape).save()

        if target == 'gamma':
            return gamma_qk(dist.t, dist.params, method=options['method'])
        if target == 'beta':
            return beta_qk(dist.t, dist.s, dist.params, method=options['method'])
        if target.startswith('density'):
            return dist.density(options['x'])
        if target.startswith('cdf'):
            if options['method'] is None:
                return fallback_cdf(dist, options['x'])
            return dist.cdf(options['x'], options['method'])
        if target == 'moment':
            return moment(dist, options['n'])
        return q_pochhammer_k(dist.t, options['n'], dist.params)
