import json

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from core.commands import USAGE_EXIT, command_errors, validated
from distributions.lattice import lattice_measure, sample
from distributions.serializers import KBetaSerializer, KGammaSerializer, LatticeMeasureSerializer


class Command(BaseCommand):
    help = 'Draw samples from the lattice measure of a q,k-gamma or q,k-beta law'

    def add_arguments(self, parser):
        parser.add_argument('law', choices=['gamma', 'beta'])
        parser.add_argument('--q', type=float, required=True)
        parser.add_argument('--k', type=float, required=True)
        parser.add_argument('--t', type=float, required=True)
        parser.add_argument('--s', type=float, help='Second shape (beta only)')
        parser.add_argument('--count', type=int, required=True)
        parser.add_argument('--seed', type=int, default=settings.QCALC['DEFAULT_SEED'])
        parser.add_argument('--tail-tol', type=float, default=settings.QCALC['DEFAULT_TAIL_TOL'])
        parser.add_argument('--measure', help='Also write the lattice measure as JSON to this path')

    def handle(self, *args, **options):
        shape = {key: options[key] for key in ('q', 'k', 't', 's') if options[key] is not None}
        serializer_class = KBetaSerializer if options['law'] == 'beta' else KGammaSerializer
        if options['count'] < 1:
            raise CommandError(f"--count: must be at least 1, got {options['count']}", returncode=USAGE_EXIT)

        with command_errors():
            dist = validated(serializer_class, shape).save()
            measure = lattice_measure(dist, options['tail_tol'])
            draws = sample(measure, options['count'], options['seed'])

        if options['measure']:
            with open(options['measure'], 'w') as f:
                json.dump(LatticeMeasureSerializer(measure).data, f, indent=2)

        self.stdout.write(''.join('%.17g\n' % value for value in draws), ending='')
