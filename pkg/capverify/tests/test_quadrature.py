import math
from unittest import TestCase

import mpmath

from capverify.errors import BudgetExhausted, NonOrderedBounds
from capverify.interval_core import ONE, Interval
from capverify.quad_rigor import (
    DecayBound,
    Enclosure,
    PiecewiseJetFunction,
    change_of_variables_halfcircle,
    integrate_2d,
    integrate_adaptive,
    integrate_halfline,
    integrate_scheme,
    integrate_taylor,
    sum_enclosures,
)
from capverify.taylor_ad import jet_exp, jet_sin, jet_sqrt


E_MINUS_ONE = math.e - 1


class FixedRulesTestCase(TestCase):
    def test_trapezoid_exp(self):
        e = integrate_scheme(jet_exp, 0, 1, 'trapezoid', 4, derivative_bound='global')
        self.assertAlmostEqual(e.value.lo, 1.712642, delta=2e-3)
        self.assertAlmostEqual(e.value.hi, 1.7222017, delta=2e-3)
        self.assertTrue(e.value.contains(E_MINUS_ONE))
        self.assertEqual(e.cells, 4)
        self.assertEqual(e.scheme, 'trapezoid')

        local = integrate_scheme(jet_exp, 0, 1, 'trapezoid', 4, derivative_bound='panel')
        self.assertTrue(local.value.contains(E_MINUS_ONE))
        self.assertLessEqual(local.width(), e.width())

    def test_taylor_exp(self):
        e = integrate_taylor(jet_exp, 0, 1, order=3)
        self.assertAlmostEqual(e.value.lo, 1.70833, delta=1e-4)
        self.assertAlmostEqual(e.value.hi, 1.77994, delta=1e-4)
        self.assertTrue(e.value.contains(E_MINUS_ONE))

        finer = integrate_taylor(jet_exp, 0, 1, order=6, center='midpoint', panels=4)
        self.assertTrue(finer.value.contains(E_MINUS_ONE))
        self.assertLess(finer.width(), 1e-6)

    def test_simpson_sin(self):
        e = integrate_scheme(jet_sin, 0, math.pi, 'simpson', 8)
        self.assertTrue(e.value.contains(2))
        self.assertLess(e.width(), 1e-2)

    def test_midpoint_converges(self):
        widths = [integrate_scheme(jet_exp, 0, 1, 'midpoint', n).width() for n in (4, 8, 16)]
        self.assertGreater(widths[0], widths[1])
        self.assertGreater(widths[1], widths[2])

    def test_errors(self):
        with self.assertRaises(ValueError):
            integrate_scheme(jet_exp, 0, 1, 'gauss', 4)
        with self.assertRaises(ValueError):
            integrate_scheme(jet_exp, 0, 1, 'trapezoid', 0)
        with self.assertRaises(ValueError):
            integrate_taylor(jet_exp, 0, 1, order=0)
        with self.assertRaises(NonOrderedBounds):
            integrate_taylor(jet_exp, 2, 1, order=3)


class AdaptiveTestCase(TestCase):
    def test_exp(self):
        e = integrate_adaptive(jet_exp, 0, 1, tol=1e-8)
        self.assertLessEqual(e.width(), 1e-8)
        self.assertTrue(e.value.contains(E_MINUS_ONE))
        self.assertTrue(e.main.subset(e.value))
        self.assertEqual(set(e.as_dict()), {'value', 'main', 'error_term', 'cells', 'scheme'})

    def test_kink(self):
        tent = PiecewiseJetFunction.from_seams([lambda x: x, lambda x: 1 - x], seams=[0.5], lo=0, hi=1)
        e = integrate_adaptive(tent, 0, 1, tol=1e-10)
        self.assertTrue(e.value.contains(0.25))
        self.assertLessEqual(e.width(), 1e-10)

    def test_thick_bounds(self):
        e = integrate_adaptive(jet_exp, Interval(0, 0.01), 1, tol=0.05)
        self.assertTrue(e.value.contains(E_MINUS_ONE))
        self.assertTrue(e.value.contains(math.e - math.exp(0.01)))

    def test_budget(self):
        with self.assertRaises(BudgetExhausted) as cm:
            integrate_adaptive(jet_exp, 0, 1, tol=1e-15, budget=2, order=2)
        self.assertTrue(cm.exception.enclosure.value.contains(E_MINUS_ONE))

    def test_errors(self):
        with self.assertRaises(ValueError):
            integrate_adaptive(jet_exp, 0, 1, tol=0)
        with self.assertRaises(NonOrderedBounds):
            integrate_adaptive(jet_exp, 2, 1, tol=1e-6)


class HalflineTestCase(TestCase):
    def test_inverse_square(self):
        e = integrate_halfline(lambda x: 1 / (x * x), 2, DecayBound(C=ONE, k=2, cutoff=1.0), tol=1e-4)
        self.assertTrue(e.value.contains(0.5))
        self.assertLessEqual(e.width(), 1e-4)
        self.assertEqual([name for name, _ in e.parts], ['body', 'tail'])

    def test_wide_tail(self):
        # tail C / M stays above tol for every cutoff
        decay = DecayBound(C=Interval(1e30, 1e30), k=2, cutoff=1.0)
        with self.assertRaises(BudgetExhausted) as cm:
            integrate_halfline(lambda x: 1 / (x * x), 1, decay, tol=1e-4)
        enclosure = cm.exception.enclosure
        self.assertTrue(enclosure.value.contains(1))
        self.assertEqual([name for name, _ in enclosure.parts], ['body', 'tail'])

    def test_decay_bound(self):
        decay = DecayBound(C=ONE, k=3, cutoff=1.0)
        self.assertEqual(decay.tail(), Interval(-0.5, 0.5))
        # the range bound of |f| * x**3 overestimates on every piece
        loose = DecayBound(C=Interval(2, 2), k=3, cutoff=1.0)
        self.assertTrue(loose.verify(lambda x: 1 / (x * x * x), upto=10.0))
        self.assertFalse(loose.verify(lambda x: 3 / (x * x * x), upto=10.0))
        with self.assertRaises(ValueError):
            decay.tail(0.5)
        with self.assertRaises(ValueError):
            DecayBound(C=ONE, k=1, cutoff=1.0)


class TwoDimensionalTestCase(TestCase):
    def test_polynomial(self):
        e = integrate_2d(lambda x, y: x * y, (0, 1, 0, 1), tol=1e-6)
        self.assertTrue(e.value.contains(0.25))

    def test_exp(self):
        e = integrate_2d(lambda x, y: jet_exp(x + y), (0, 1, 0, 1), tol=1e-5)
        self.assertTrue(e.value.contains(E_MINUS_ONE**2))
        self.assertLessEqual(e.width(), 1e-5)

    def test_bisects_failing_cells(self):
        # interval arithmetic puts the radicand below zero on the whole box
        def f(x, y):
            return jet_sqrt(x * x - x * 2 + 1 + y + 1)

        e = integrate_2d(f, (0, 2, 0, 1), tol=1e-4)
        expected = mpmath.quad(lambda x, y: mpmath.sqrt((x - 1) ** 2 + y + 1), [0, 1, 2], [0, 1])
        self.assertTrue(e.value.contains(float(expected)), f'{e.value} vs {expected}')
        self.assertLessEqual(e.width(), 1e-4)

    def test_errors(self):
        with self.assertRaises(NonOrderedBounds):
            integrate_2d(lambda x, y: x * y, (1, 0, 0, 1), tol=1e-6)


class TransformAndSumTestCase(TestCase):
    def test_halfcircle(self):
        g = change_of_variables_halfcircle(lambda x: 1 / (1 + x * x))
        e = integrate_adaptive(g, -3, 3, tol=1e-8)
        # int 1/(1+x**2) over [-2 tan(1.5), 2 tan(1.5)]
        self.assertTrue(e.value.contains(2 * math.atan(2 * math.tan(1.5))))

    def test_sum_is_ordered(self):
        parts = [Enclosure.build(Interval(k, k), Interval(-0.1, 0.1)) for k in range(4)]
        total = sum_enclosures(parts, scheme='parts')
        self.assertTrue(total.value.contains(6))
        self.assertEqual(total.cells, 4)
        with self.assertRaises(ValueError):
            Enclosure(value=Interval(0, 1), main=Interval(2, 2), error_term=Interval(0, 0))
