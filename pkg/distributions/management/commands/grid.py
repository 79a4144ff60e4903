import logging

from django.core.management.base import BaseCommand

from core.commands import command_errors
from distributions.grids import GRID_KINDS, grid_rows, parse_sweep, render_csv

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = 'Emit a CSV grid of a q,k-kernel, density or CDF over its support'

    def add_arguments(self, parser):
        parser.add_argument('kind', choices=GRID_KINDS)
        parser.add_argument('--q', required=True, help='Value or range, e.g. 0.6 or 0..0.95')
        parser.add_argument('--k', required=True, help='Value or range, e.g. 3 or 1..5')
        parser.add_argument('--t', type=float, required=True)
        parser.add_argument('--s', type=float, help='Second shape (beta kinds only)')
        parser.add_argument('--points', type=int, default=200)
        parser.add_argument('--sweeps', type=int, help='Values per float range (default: GRID_SWEEPS)')
        parser.add_argument('--output', help='Output file path (optional)')

    def handle(self, *args, **options):
        with command_errors():
            q_values = parse_sweep(options['q'], options['sweeps'])
            k_values = parse_sweep(options['k'], options['sweeps'])
            header, rows = grid_rows(options['kind'], q_values, k_values, options['t'],
                                     options['s'], options['points'])
        output = render_csv(header, rows)

        if options['output']:
            with open(options['output'], 'w', newline='') as f:
                f.write(output)
            logger.info(f"Grid written to {options['output']}")
        else:
            self.stdout.write(output, ending='')
