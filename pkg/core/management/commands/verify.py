import json

from django.core.management.base import BaseCommand, CommandError

from core.serializers import VerifyReportSerializer
from core.verification import SUITES, run_suite


class Command(BaseCommand):
    help = 'Verify the q-calculus identities numerically and exactly'

    def add_arguments(self, parser):
        parser.add_argument('--suite', choices=['all', *SUITES], default='all')
        parser.add_argument('--tol', type=float, help='Tolerance for analytic cases (default: per case)')
        parser.add_argument('--json', dest='json_path', help='Write the report as JSON to this path')
        parser.add_argument('--failures-only', action='store_true', help='List failing cases only')

    def handle(self, *args, **options):
        if options['tol'] is not None and not options['tol'] > 0:
            raise CommandError('--tol must be positive', returncode=2)

        report = run_suite(options['suite'], options['tol'])

        for case in report.cases:
            if options['failures_only'] and case.passed:
                continue
            status = 'PASS' if case.passed else 'FAIL'
            params = ' '.join(f'{key}={value}' for key, value in case.params.items())
            detail = case.reason or f'rel_err={case.rel_err:.3e} tol={case.tol:.1e}'
            self.stdout.write(f'{status} {case.id} [{params}] {detail}')

        if options['json_path']:
            with open(options['json_path'], 'w') as f:
                json.dump(VerifyReportSerializer(report).data, f, indent=2)

        failed = len(report.failures)
        summary = f'{report.suite}: {len(report.cases) - failed}/{len(report.cases)} cases passed'
        if report.passed:
            self.stdout.write(self.style.SUCCESS(summary))
            return
        self.stdout.write(self.style.ERROR(summary))
        raise CommandError(f'{failed} verification cases failed',
                           returncode=3 if report.nonconvergent else 1)
