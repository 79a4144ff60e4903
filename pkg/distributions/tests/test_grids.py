from django.test import SimpleTestCase

from core.exceptions import QDomainError
from distributions.grids import grid_rows, parse_sweep, render_csv


class ParseSweepTests(SimpleTestCase):
    def test_single_value(self):
        self.assertEqual(parse_sweep('0.6'), [0.6])

    def test_integer_range(self):
        self.assertEqual(parse_sweep('1..5'), [1.0, 2.0, 3.0, 4.0, 5.0])

    def test_float_range(self):
        values = parse_sweep('0..0.95', sweeps=20)
        self.assertEqual(len(values), 20)
        self.assertEqual(values[0], 0.0)
        self.assertAlmostEqual(values[-1], 0.95, places=15)
        self.assertEqual(values, sorted(values))

    def test_float_range_defaults_to_setting(self):
        self.assertEqual(len(parse_sweep('0.1..0.5')), 20)

    def test_rejects_garbage_and_empty_ranges(self):
        for text in ('abc', '0.1..x', '5..1', '0.9..0.1'):
            with self.subTest(text=text), self.assertRaises(QDomainError):
                parse_sweep(text)


class GridRowsTests(SimpleTestCase):
    def test_single_parameter_grid(self):
        header, rows = grid_rows('cdf-gamma', [0.5], [2.0], t=1.5, points=10)
        self.assertEqual(header, ['x', 'value'])
        self.assertEqual(len(rows), 10)
        values = [row[1] for row in rows]
        self.assertEqual(values, sorted(values))
        self.assertAlmostEqual(values[-1], 1.0, delta=1e-8)

    def test_swept_parameters_lead(self):
        header, rows = grid_rows('density-gamma', [0.2, 0.6], [1.0, 2.0], t=1.0, points=5)
        self.assertEqual(header, ['q', 'k', 'x', 'value'])
        self.assertEqual(len(rows), 20)
        self.assertEqual(rows[0][:2], [0.2, 1.0])
        self.assertEqual(rows[-1][:2], [0.6, 2.0])
        self.assertTrue(all(row[3] >= 0 for row in rows))

    def test_kernel_grid(self):
        _, rows = grid_rows('kernel-gamma', [0.5], [1.0], t=1.0, points=4)
        kernels = [row[1] for row in rows]
        self.assertEqual(kernels, sorted(kernels, reverse=True))
        self.assertTrue(all(0 < value <= 1 for value in kernels))

    def test_beta_grid(self):
        header, rows = grid_rows('cdf-beta', [0.6], [1.0], t=2.0, s=1.5, points=8)
        self.assertAlmostEqual(rows[-1][1], 1.0, delta=1e-8)
        with self.assertRaises(QDomainError):
            grid_rows('density-beta', [0.6], [1.0], t=2.0, points=8)

    def test_rejects_bad_kind_and_points(self):
        with self.assertRaises(QDomainError):
            grid_rows('pdf', [0.5], [1.0], t=1.0)
        with self.assertRaises(QDomainError):
            grid_rows('cdf-gamma', [0.5], [1.0], t=1.0, points=0)

    def test_render_csv(self):
        text = render_csv(['x', 'value'], [[0.5, 1.0 / 3.0]])
        self.assertEqual(text, 'x,value\n0.5,0.33333333333333331\n')
