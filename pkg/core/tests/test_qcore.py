import itertools
import math

from django.apps import apps
from django.conf import settings
from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings as hypothesis_settings, strategies as st
import mpmath

from core.exceptions import NonConvergenceError, PrecisionLossError, QDomainError
from core.qcore import (
    QParams,
    SeriesControl,
    classical_pochhammer_k,
    jackson_integral,
    jackson_terms,
    mellin_q_transform,
    q_bracket,
    q_derivative,
    q_exponential_E,
    q_exponential_product,
    q_factorial,
    q_pochhammer_k,
    q_shifted_power,
    q_shifted_product,
    sum_series,
    validate_q,
)


class QParamsTests(SimpleTestCase):
    def test_rejects_q_outside_unit_interval(self):
        for q in (-0.1, 1.0, 1.5, math.nan):
            with self.subTest(q=q), self.assertRaises(QDomainError):
                QParams(q, 1.0)

    def test_rejects_non_positive_k(self):
        for k in (0.0, -2.0):
            with self.subTest(k=k), self.assertRaises(QDomainError):
                QParams(0.5, k)

    def test_q_above_q_max_is_non_convergence(self):
        with self.assertRaises(NonConvergenceError):
            validate_q(1 - 1e-7)

    @override_settings(QCALC={**settings.QCALC, 'Q_MAX': 0.9})
    def test_q_max_comes_from_settings(self):
        with self.assertRaises(NonConvergenceError):
            validate_q(0.95)

    def test_base_and_bracket(self):
        params = QParams(0.5, 2.0)
        self.assertEqual(params.base, 0.25)
        self.assertAlmostEqual(params.bracket_k, 1.5, places=15)


class SeriesControlTests(SimpleTestCase):
    def test_defaults_from_settings(self):
        ctl = SeriesControl.from_settings()
        self.assertEqual((ctl.rtol, ctl.consecutive, ctl.max_terms), (1e-14, 3, 100_000))

    def test_invariants(self):
        with self.assertRaises(QDomainError):
            SeriesControl(rtol=0.0, consecutive=3, max_terms=10)
        with self.assertRaises(QDomainError):
            SeriesControl(rtol=1e-14, consecutive=0, max_terms=10)
        with self.assertRaises(QDomainError):
            SeriesControl(rtol=1e-14, consecutive=5, max_terms=4)

    def test_term_cap_raises_non_convergence(self):
        ctl = SeriesControl(rtol=1e-14, consecutive=3, max_terms=5)
        with self.assertRaises(NonConvergenceError):
            jackson_integral(lambda x: 1.0, 0.0, 1.0, 0.9, ctl)


class SumSeriesTests(SimpleTestCase):
    ctl = SeriesControl(rtol=1e-14, consecutive=3, max_terms=1000)

    def test_leading_zero_terms_do_not_stop_the_sum(self):
        terms = itertools.chain([0.0] * 10, (0.5 ** n for n in itertools.count()))
        self.assertAlmostEqual(sum_series(terms, self.ctl), 2.0, delta=1e-13)

    def test_exact_zero_tail_is_not_cancellation(self):
        terms = itertools.chain([1.0, -1.0], itertools.repeat(0.0))
        self.assertEqual(sum_series(terms, self.ctl, alternating=True), 0.0)

    def test_all_zero_terms_hit_the_cap(self):
        with self.assertRaises(NonConvergenceError):
            sum_series(itertools.repeat(0.0), self.ctl)


class ProjectSettingsTests(SimpleTestCase):
    def test_only_the_needed_apps_are_installed(self):
        self.assertFalse(apps.is_installed('django.contrib.auth'))
        self.assertFalse(apps.is_installed('django.contrib.contenttypes'))
        self.assertTrue(apps.is_installed('rest_framework'))


class BracketAndPochhammerTests(SimpleTestCase):
    def test_bracket_examples(self):
        self.assertEqual(q_bracket(5, 0.0), 1.0)
        self.assertAlmostEqual(q_bracket(2, 0.5), 1.5, places=15)
        self.assertEqual(q_bracket(0, 0.7), 0.0)

    def test_bracket_rejects_bad_q(self):
        with self.assertRaises(QDomainError):
            q_bracket(2, 1.0)

    def test_q_factorial(self):
        self.assertEqual(q_factorial(0, 0.5), 1.0)
        self.assertAlmostEqual(q_factorial(3, 0.5), 1.0 * 1.5 * 1.75, places=14)

    def test_q_pochhammer_examples(self):
        self.assertEqual(q_pochhammer_k(3, 0, QParams(0.3, 1.0)), 1)
        self.assertEqual(q_pochhammer_k(1, 3, QParams(0.0, 2.0)), 1.0)
        self.assertAlmostEqual(q_pochhammer_k(2, 2, QParams(0.5, 1.0)), 2.625, places=14)

    def test_q_pochhammer_rejects_negative_n(self):
        with self.assertRaises(QDomainError):
            q_pochhammer_k(1, -1, QParams(0.5, 1.0))

    def test_classical_pochhammer_examples(self):
        self.assertEqual(classical_pochhammer_k(1, 3, 2), 15)
        self.assertEqual(classical_pochhammer_k(7, 0, 3), 1)
        self.assertEqual(classical_pochhammer_k(1, 4, 1), 24)

    def test_classical_limit(self):
        for t in (1, 2, 3):
            for k in (1, 2, 3):
                for n in range(6):
                    with self.subTest(t=t, k=k, n=n):
                        q_value = q_pochhammer_k(t, n, QParams(0.999, k))
                        classical = classical_pochhammer_k(t, n, k)
                        self.assertLess(abs(q_value - classical) / classical, 0.02)


class ShiftedProductTests(SimpleTestCase):
    def test_finite_examples(self):
        self.assertAlmostEqual(q_shifted_product(1.0, -0.5, 1, 0.3), 0.5, places=15)
        self.assertEqual(q_shifted_product(2.0, 1.0, 0, 0.3), 1)

    def test_infinite_examples(self):
        self.assertEqual(q_shifted_product(1.0, 0.0, math.inf, 0.5), 1.0)
        value = q_shifted_product(1.0, -0.5, math.inf, 0.5)
        self.assertAlmostEqual(value, 0.2887880950866024, delta=1e-13)
        self.assertAlmostEqual(value, float(mpmath.qp(0.5, 0.5)), delta=1e-13)

    def test_infinite_needs_nonzero_x(self):
        with self.assertRaises(QDomainError):
            q_shifted_product(0.0, 1.0, math.inf, 0.5)

    def test_rejects_bad_n_and_base(self):
        with self.assertRaises(QDomainError):
            q_shifted_product(1.0, 1.0, 1.5, 0.5)
        with self.assertRaises(QDomainError):
            q_shifted_product(1.0, 1.0, 2, 1.0)

    def test_power_zero_exponent(self):
        self.assertEqual(q_shifted_power(-0.7, 0, 0.4), 1.0)

    def test_power_integer_exponent_telescopes(self):
        for n in range(1, 6):
            with self.subTest(n=n):
                self.assertAlmostEqual(
                    q_shifted_power(-0.3, n, 0.6), q_shifted_product(1.0, -0.3, n, 0.6), delta=1e-12)

    def test_power_real_exponent_against_mpmath(self):
        expected = mpmath.qp(0.3, 0.6) / mpmath.qp(0.3 * mpmath.mpf(0.6) ** 0.5, 0.6)
        self.assertAlmostEqual(q_shifted_power(-0.3, 0.5, 0.6), float(expected), delta=1e-13)

    def test_power_exponent_additivity(self):
        whole = q_shifted_power(-0.3, 1.2, 0.6)
        split = q_shifted_power(-0.3, 0.5, 0.6) * q_shifted_power(0.6 ** 0.5 * -0.3, 0.7, 0.6)
        self.assertAlmostEqual(whole, split, delta=1e-12)

    def test_power_near_one_does_not_underflow(self):
        # (q;q)_inf underflows at this base; the paired ratio does not
        self.assertAlmostEqual(q_shifted_power(-0.999, 2, 0.999), (1 - 0.999) * (1 - 0.999 ** 2), delta=1e-15)

    def test_power_negative_exponent_at_zero_base(self):
        with self.assertRaises(QDomainError):
            q_shifted_power(-0.5, -0.5, 0.0)


class ExponentialTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(q_exponential_E(2.0, 0.0), 3.0)
        self.assertEqual(q_exponential_E(0.0, 0.7), 1.0)

    def test_terminating_series_can_vanish(self):
        # at q = 0 only the terms 1 and x survive
        self.assertEqual(q_exponential_E(-1.0, 0.0), 0.0)

    def test_series_matches_product(self):
        for base in (0.1, 0.5, 0.8):
            for x in (-1.0, 0.5, 2.0):
                with self.subTest(base=base, x=x):
                    self.assertAlmostEqual(
                        q_exponential_E(x, base), q_exponential_product(x, base),
                        delta=1e-12 * abs(q_exponential_product(x, base)))

    def test_cancellation_is_reported(self):
        # E_q^{-1/(1-q)} vanishes while its terms do not
        with self.assertRaises(PrecisionLossError):
            q_exponential_E(-10.0, 0.9)


class DerivativeAndIntegralTests(SimpleTestCase):
    def test_derivative_examples(self):
        self.assertAlmostEqual(q_derivative(lambda x: x * x, 1.0, 0.5), 1.5, places=15)
        self.assertEqual(q_derivative(lambda x: 4.0, 2.0, 0.3), 0.0)
        self.assertEqual(q_derivative(lambda x: x, 3.0, 0.0), 1.0)

    def test_derivative_rejects_zero(self):
        with self.assertRaises(QDomainError):
            q_derivative(lambda x: x, 0.0, 0.5)

    def test_jackson_examples(self):
        self.assertAlmostEqual(jackson_integral(lambda x: 1.0, 0.0, 1.0, 0.7), 1.0, delta=1e-13)
        self.assertAlmostEqual(jackson_integral(lambda x: x, 0.0, 1.0, 0.5), 2.0 / 3.0, delta=1e-14)

    def test_jackson_with_vanishing_leading_points(self):
        # f is zero at 2 q^n for n < 7
        value = jackson_integral(lambda x: max(0.0, 1.0 - x), 0.0, 2.0, 0.9)
        self.assertAlmostEqual(value, 0.2 * (0.9 ** 7 / 0.1 - 2 * 0.9 ** 14 / 0.19), delta=1e-12)

    def test_jackson_at_q_zero(self):
        f = lambda x: x ** 2 + 1.0
        self.assertEqual(jackson_integral(f, 0.5, 2.0, 0.0), 2.0 * f(2.0) - 0.5 * f(0.5))

    def test_jackson_rejects_bad_interval(self):
        with self.assertRaises(QDomainError):
            jackson_integral(lambda x: 1.0, 1.0, 0.5, 0.5)

    def test_power_rule(self):
        for q in (0.2, 0.7):
            for s in (-0.5, 0.0, 1.5, 3.0):
                with self.subTest(q=q, s=s):
                    expected = 2.0 ** (s + 1) / q_bracket(s + 1, q)
                    self.assertAlmostEqual(
                        jackson_integral(lambda x: x ** s, 0.0, 2.0, q), expected, delta=1e-12 * expected)

    def test_monotone_partial_sums(self):
        running = 0.0
        for index, term in enumerate(jackson_terms(lambda x: x * x, 1.5, 0.6)):
            self.assertGreaterEqual(running + term, running)
            running += term
            if index > 200:
                break

    def test_mellin_transform_of_power(self):
        # int_0^1 x^{s-1} x d_qx = 1/[s+1]_q
        self.assertAlmostEqual(mellin_q_transform(lambda x: x, 1.0, 2.0, 0.5), 1 / q_bracket(3, 0.5), delta=1e-14)

    @hypothesis_settings(max_examples=60, deadline=None)
    @given(
        q=st.floats(min_value=0.05, max_value=0.95),
        x=st.floats(min_value=0.1, max_value=3.0),
        a=st.floats(min_value=-2.0, max_value=2.0),
    )
    def test_product_rule(self, q, x, a):
        f = lambda y: 1.0 + a * y + y ** 3
        g = lambda y: 2.0 - y ** 2
        lhs = q_derivative(lambda y: f(y) * g(y), x, q)
        rhs = q_derivative(f, x, q) * g(x) + f(q * x) * q_derivative(g, x, q)
        self.assertAlmostEqual(lhs, rhs, delta=1e-10 * max(1.0, abs(lhs)))

    def test_chain_rule_for_power_arguments(self):
        f = lambda y: 1.0 + 2.0 * y + 3.0 * y ** 2
        for b in (1, 2, 3):
            for q in (0.1, 0.5, 0.9):
                with self.subTest(b=b, q=q):
                    lhs = q_derivative(lambda y: f(1.5 * y ** b), 0.7, q)
                    rhs = 1.5 * q_bracket(b, q) * 0.7 ** (b - 1) * q_derivative(f, 1.5 * 0.7 ** b, q ** b)
                    self.assertAlmostEqual(lhs, rhs, delta=1e-10 * abs(lhs))

    def test_integration_by_parts(self):
        f = lambda y: 1.0 + y ** 2
        g = lambda y: 3.0 - y + y ** 3
        ctl = SeriesControl(rtol=1e-13, consecutive=3, max_terms=100_000)
        for q in (0.0, 0.3, 0.6):
            with self.subTest(q=q):
                lhs = f(2.0) * g(2.0) - f(0.5) * g(0.5)
                rhs = (jackson_integral(lambda x: f(x) * q_derivative(g, x, q), 0.5, 2.0, q, ctl)
                       + jackson_integral(lambda x: g(q * x) * q_derivative(f, x, q), 0.5, 2.0, q, ctl))
                self.assertAlmostEqual(lhs, rhs, delta=1e-10 * abs(lhs))
