import csv
import json
import sys

from django.core.management.base import BaseCommand

from core.commands import add_actions, command_errors, validated
from core.exceptions import QDomainError
from trees.grafting import decompose, enumerate_trees, unweighted_count, weight, weighted_cardinality
from trees.serializers import EnumeratedTreeSerializer, PlantedTreeSerializer, TreeShapeSerializer
from trees.shapes import GraftingSequence


class Command(BaseCommand):
    help = 'Weighted planar rooted trees T_{n,k}^t: cardinalities, listings and the grafting code'

    def add_arguments(self, parser):
        add = add_actions(parser)

        poly = add('poly', help='|T_{n,k}^t, omega| as a polynomial in q')
        self._shape_args(poly)
        poly.add_argument('--brute-force', action='store_true',
                          help='Sum weights over the enumeration instead of multiplying brackets')
        poly.add_argument('--format', choices=['text', 'json'], default='text')

        listing = add('enumerate', help='One line per tree in lexicographic sequence order')
        self._shape_args(listing)
        listing.add_argument('--format', choices=['text', 'json', 'csv'], default='text')

        count = add('count', help='|T_{n,k}^t| = (t)_{n,k}')
        self._shape_args(count)

        weight_parser = add('weight', help='omega of the tree coded by --seq')
        weight_parser.add_argument('--seq', required=True, help='Grafting sequence, e.g. 1,3,6,7')
        weight_parser.add_argument('--t', type=int, required=True)
        weight_parser.add_argument('--k', type=int, required=True)

        decompose_parser = add('decompose', help='Grafting sequence of a JSON tree')
        decompose_parser.add_argument('--tree', required=True, help='Path to a JSON tree, or - for stdin')
        decompose_parser.add_argument('--t', type=int, required=True)
        decompose_parser.add_argument('--k', type=int, required=True)

    @staticmethod
    def _shape_args(parser):
        parser.add_argument('--t', type=int, required=True)
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--k', type=int, required=True)

    def handle(self, *args, **options):
        action = options['action']
        with command_errors():
            getattr(self, f"handle_{action}")(options)

    def _params(self, options, n=None):
        data = {'t': options['t'], 'k': options['k'], 'n': options['n'] if n is None else n}
        return validated(TreeShapeSerializer, data).save()

    def handle_poly(self, options):
        polynomial = weighted_cardinality(self._params(options), brute_force=options['brute_force'])
        if options['format'] == 'json':
            self.stdout.write(json.dumps(polynomial.to_json()))
        else:
            self.stdout.write(str(polynomial))

    def handle_enumerate(self, options):
        params = self._params(options)
        fmt = options['format']
        if fmt == 'csv':
            writer = csv.writer(self.stdout, lineterminator='\n')
            writer.writerow(['sequence', 'weight_exponent'])
        for item in enumerate_trees(params, verify=True):
            seq = item[0]
            if fmt == 'json':
                self.stdout.write(json.dumps(EnumeratedTreeSerializer(item).data))
            elif fmt == 'csv':
                writer.writerow([str(seq), seq.weight_exponent])
            else:
                self.stdout.write(f"{seq}; {seq.weight_exponent}")

    def handle_count(self, options):
        self.stdout.write(str(unweighted_count(self._params(options))))

    def handle_weight(self, options):
        seq = GraftingSequence.parse(options['seq'])
        seq.validate_for(self._params(options, n=len(seq)))
        self.stdout.write(str(weight(seq)))

    def handle_decompose(self, options):
        try:
            if options['tree'] == '-':
                data = json.load(sys.stdin)
            else:
                with open(options['tree']) as f:
                    data = json.load(f)
        except json.JSONDecodeError as exc:
            raise QDomainError(f"--tree is not valid JSON: {exc}") from None
        serializer = validated(PlantedTreeSerializer, data)
        tree = serializer.validated_data
        params = self._params(options, n=len(tree.vertices()))
        self.stdout.write(str(decompose(tree, params)))
