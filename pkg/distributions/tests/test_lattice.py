import numpy as np
from django.test import SimpleTestCase

from core.exceptions import QDomainError
from core.qcore import QParams
from core.verification import sampler_statistics
from distributions.densities import KBetaDist, KGammaDist
from distributions.lattice import lattice_measure, sample


class LatticeMeasureTests(SimpleTestCase):
    def test_q_zero_is_a_single_atom(self):
        measure = lattice_measure(KGammaDist(QParams(0.0, 2.0), 1.5))
        self.assertEqual(len(measure), 1)
        self.assertAlmostEqual(measure.support[0], 1.0, places=15)
        self.assertAlmostEqual(measure.total_mass, 1.0, places=13)

    def test_total_mass(self):
        for dist in (KGammaDist(QParams(0.5, 1.0), 1.0),
                     KGammaDist(QParams(0.8, 2.0), 0.5),
                     KBetaDist(QParams(0.6, 1.0), 2.0, 1.5)):
            with self.subTest(dist=dist):
                self.assertAlmostEqual(lattice_measure(dist).total_mass, 1.0, delta=1e-10)

    def test_support_is_geometric(self):
        dist = KGammaDist(QParams(0.5, 1.0), 1.0)
        measure = lattice_measure(dist)
        self.assertEqual(measure.support[0], dist.upper)
        np.testing.assert_allclose(measure.support[1:] / measure.support[:-1], 0.5)
        self.assertTrue(np.all(measure.masses > 0))

    def test_prefix_sums_match_cdf(self):
        dist = KGammaDist(QParams(0.5, 2.0), 1.5)
        measure = lattice_measure(dist)
        tails = np.cumsum(measure.masses[::-1])[::-1]
        for m in (0, 1, 3, 6):
            with self.subTest(m=m):
                self.assertAlmostEqual(dist.cdf(measure.support[m], 'jackson'), tails[m], delta=1e-10)

    def test_ascending_cdf(self):
        measure = lattice_measure(KGammaDist(QParams(0.5, 1.0), 1.0))
        values, _ = measure.ascending()
        self.assertTrue(np.all(np.diff(values) > 0))
        cdf = measure.cdf()
        self.assertTrue(np.all(np.diff(cdf) >= 0))
        self.assertEqual(cdf[-1], 1.0)

    def test_expectation(self):
        dist = KGammaDist(QParams(0.5, 2.0), 1.0)
        measure = lattice_measure(dist)
        # E[X^k] = [t]_q
        self.assertAlmostEqual(measure.expectation(lambda x: x ** 2), 1.0, delta=1e-9)

    def test_tail_tol_range(self):
        dist = KGammaDist(QParams(0.5, 1.0), 1.0)
        for tail_tol in (0.0, -1e-9, 0.01):
            with self.subTest(tail_tol=tail_tol), self.assertRaises(QDomainError):
                lattice_measure(dist, tail_tol)

    def test_coarser_tail_tol_truncates_earlier(self):
        dist = KGammaDist(QParams(0.5, 1.0), 1.0)
        self.assertLess(len(lattice_measure(dist, 1e-4)), len(lattice_measure(dist, 1e-12)))


class SamplerTests(SimpleTestCase):
    def setUp(self):
        self.measure = lattice_measure(KGammaDist(QParams(0.5, 2.0), 1.0))

    def test_same_seed_same_draws(self):
        np.testing.assert_array_equal(sample(self.measure, 500, seed=7), sample(self.measure, 500, seed=7))

    def test_draws_lie_on_the_support(self):
        draws = sample(self.measure, 1000, seed=3)
        self.assertTrue(np.all(np.isin(draws, self.measure.support)))

    def test_zero_count(self):
        self.assertEqual(len(sample(self.measure, 0, seed=1)), 0)

    def test_rejects_bad_count(self):
        for count in (-1, 2.5):
            with self.subTest(count=count), self.assertRaises(QDomainError):
                sample(self.measure, count, seed=1)

    def test_statistics(self):
        z_score, ks = sampler_statistics(KGammaDist(QParams(0.5, 2.0), 1.0), count=100_000, seed=0)
        self.assertLess(z_score, 3.0)
        self.assertLess(ks, 0.01)
