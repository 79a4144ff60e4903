import json
import math
import os
import tempfile
from io import StringIO
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from core.exceptions import NonConvergenceError, QDomainError
from core.serializers import VerifyCaseSerializer, VerifyReportSerializer
from core.verification import (
    ANALYTIC,
    EXACT,
    QUADRATURE,
    SUITES,
    Check,
    relative_error,
    run_check,
    run_suite,
)


def failing_check():
    return Check('always_off', 'a = b', {'q': 0.5}, 1e-12, lambda: (1.0, 1.1))


def nonconvergent_check():
    def compute():
        raise NonConvergenceError('series did not settle')
    return Check('never_settles', 'a = b', {'q': 0.5}, 1e-12, compute)


class RunCheckTests(SimpleTestCase):
    def test_relative_error(self):
        self.assertEqual(relative_error(0.0, 0.0), 0.0)
        self.assertAlmostEqual(relative_error(1.0, 1.1), 0.1 / 1.1, places=15)

    def test_tol_override_applies_to_analytic_cases_only(self):
        analytic = Check('a', 'a', {}, 1e-12, lambda: (1.0, 1.0 + 1e-9), kind=ANALYTIC)
        quadrature = Check('b', 'b', {}, 1e-12, lambda: (1.0, 1.0 + 1e-9), kind=QUADRATURE)
        self.assertFalse(run_check(analytic).passed)
        case = run_check(analytic, tol=1e-8)
        self.assertTrue(case.passed)
        self.assertEqual(case.tol, 1e-8)
        case = run_check(quadrature, tol=1e-8)
        self.assertFalse(case.passed)
        self.assertEqual(case.tol, 1e-12)

    def test_exact_cases_compare_rendered_values(self):
        self.assertTrue(run_check(Check('e', 'e', {}, 0.0, lambda: (15, 15), kind=EXACT)).passed)
        self.assertFalse(run_check(Check('e', 'e', {}, 0.0, lambda: (15, 16), kind=EXACT)).passed)

    def test_errors_become_failed_cases(self):
        case = run_check(nonconvergent_check())
        self.assertFalse(case.passed)
        self.assertTrue(case.nonconvergent)
        self.assertIn('NonConvergenceError', case.reason)

        def bad_domain():
            raise QDomainError('q out of range')
        case = run_check(Check('d', 'd', {}, 1e-12, bad_domain))
        self.assertFalse(case.passed)
        self.assertFalse(case.nonconvergent)


class SuiteTests(SimpleTestCase):
    def test_trees_suite_passes(self):
        report = run_suite('trees')
        self.assertGreaterEqual(len(report.cases), 45)
        self.assertEqual(report.failures, [])

    def test_qcore_suite_passes(self):
        report = run_suite('qcore')
        self.assertTrue(report.passed, [(case.id, case.params, case.rel_err) for case in report.failures])

    def test_gamma_suite_passes(self):
        report = run_suite('gamma')
        self.assertTrue(report.passed, [(case.id, case.params, case.reason or case.rel_err)
                                        for case in report.failures])

    def test_integral_cases_near_one(self):
        checks = [check for check in SUITES['gamma']()
                  if check.id == 'gamma_integral' and check.params['q'] == 0.999]
        self.assertEqual(len(checks), 2)
        for check in checks:
            with self.subTest(params=check.params):
                self.assertTrue(run_check(check).passed)

    def test_moment_cases_near_one(self):
        checks = [check for check in SUITES['moments']()
                  if check.id.startswith('moment_') and check.params['q'] == 0.999]
        self.assertEqual(len(checks), 4)
        for check in checks:
            with self.subTest(id=check.id, params=check.params):
                self.assertTrue(run_check(check).passed)

    def test_jackson_cdf_normalization_grid(self):
        checks = [check for check in SUITES['moments']() if check.id == 'gamma_cdf_jackson_normalization']
        self.assertEqual(len(checks), 11 * 5 * 5)
        failures = [check.params for check in checks if not run_check(check).passed]
        self.assertEqual(failures, [])


class ReportSerializerTests(SimpleTestCase):
    def test_case_schema(self):
        case = run_check(nonconvergent_check())
        data = VerifyCaseSerializer(case).data
        self.assertEqual(set(data), {'id', 'anchor', 'params', 'lhs', 'rhs', 'rel_err', 'tol', 'pass', 'reason'})
        self.assertIsNone(data['lhs'])
        self.assertIsNone(data['rel_err'])
        self.assertIs(data['pass'], False)

    def test_report_schema(self):
        data = VerifyReportSerializer(run_suite('trees')).data
        self.assertEqual(set(data), {'suite', 'cases', 'pass'})
        self.assertIs(data['pass'], True)
        self.assertEqual(data['cases'][0]['rel_err'], 0.0)


class VerifyCommandTests(SimpleTestCase):
    def test_json_report(self):
        out = StringIO()
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'report.json')
            call_command('verify', '--suite', 'trees', '--json', path, stdout=out)
            with open(path) as f:
                data = json.load(f)
        self.assertEqual(data['suite'], 'trees')
        self.assertTrue(data['pass'])
        self.assertTrue(all(case['pass'] for case in data['cases']))
        self.assertIn('PASS tree_theorem', out.getvalue())

    def test_failures_only_hides_passing_cases(self):
        out = StringIO()
        call_command('verify', '--suite', 'trees', '--failures-only', stdout=out)
        self.assertNotIn('PASS', out.getvalue())
        self.assertIn('cases passed', out.getvalue())

    def test_failure_exit_code(self):
        with mock.patch.dict(SUITES, {'qcore': lambda: [failing_check()]}):
            with self.assertRaises(CommandError) as ctx:
                call_command('verify', '--suite', 'qcore', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 1)

    def test_nonconvergence_exit_code(self):
        with mock.patch.dict(SUITES, {'qcore': lambda: [failing_check(), nonconvergent_check()]}):
            with self.assertRaises(CommandError) as ctx:
                call_command('verify', '--suite', 'qcore', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 3)

    def test_tol_override_rescues_analytic_failure(self):
        with mock.patch.dict(SUITES, {'qcore': lambda: [failing_check()]}):
            call_command('verify', '--suite', 'qcore', '--tol', '0.2', stdout=StringIO())

    def test_rejects_non_positive_tol(self):
        with self.assertRaises(CommandError) as ctx:
            call_command('verify', '--suite', 'trees', '--tol', '0', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)

    def test_nan_tol_is_rejected(self):
        with self.assertRaises(CommandError):
            call_command('verify', '--suite', 'trees', '--tol', str(math.nan), stdout=StringIO())
