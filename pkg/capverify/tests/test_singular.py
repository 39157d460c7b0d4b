import math
from unittest import TestCase

import mpmath

from capverify.errors import BudgetExhausted, CancellationOrderMismatch
from capverify.interval_core import Interval
from capverify.singular_quad import SplitSpec, cancel_expand, hilbert_transform, pv_central, pv_far, pv_near
from capverify.taylor_ad import jet_cos, jet_sin, jet_variable


def constant(x):
    return x * 0 + 1


class HilbertTransformTestCase(TestCase):
    def test_constant(self):
        e = hilbert_transform(constant, 0.7)
        self.assertTrue(e.value.contains(0))
        self.assertLessEqual(e.width(), 1e-10)

    def test_sin_cos(self):
        for x in (0.5, 2.0, -1.0):
            e = hilbert_transform(jet_sin, x, tol=1e-8)
            self.assertTrue(e.value.contains(math.cos(x)), f'H sin({x}) = {e.value}')
            self.assertLess(e.width(), 1e-6)

            e = hilbert_transform(jet_cos, x, tol=1e-8)
            self.assertTrue(e.value.contains(-math.sin(x)), f'H cos({x}) = {e.value}')

    def test_parts(self):
        spec = SplitSpec()
        e = hilbert_transform(jet_sin, 0.5, spec=spec)
        self.assertEqual([name for name, _ in e.parts], ['near', 'central', 'far'])
        near = pv_near(jet_sin, 0.5, spec)
        far = pv_far(jet_sin, 0.5, spec)
        central = pv_central(jet_sin, 0.5, spec)
        self.assertTrue(e.value.contains(near.value.mid + central.value.mid + far.value.mid))
        self.assertIn('parts', e.as_dict())

    def test_split_invariance(self):
        values = []
        for eps1, eps2, order in ((1e-3, 1e-3, 8), (1e-2, 5e-2, 10), (0.1, 0.2, 12)):
            spec = SplitSpec.from_floats(eps1, eps2, order)
            value = hilbert_transform(jet_sin, 0.5, spec=spec, tol=1e-8).value
            self.assertTrue(value.contains(math.cos(0.5)), f'{spec}: {value}')
            values.append(value)
        self.assertIsNotNone(values[0].intersect(values[1]))
        self.assertIsNotNone(values[1].intersect(values[2]))

    def test_budget(self):
        with self.assertRaises(BudgetExhausted) as cm:
            hilbert_transform(jet_sin, 0.5, tol=1e-14, budget=4)
        self.assertTrue(cm.exception.enclosure.value.contains(math.cos(0.5)))

    def test_errors(self):
        with self.assertRaises(ValueError):
            hilbert_transform(jet_sin, 0.5, tol=0)


class SplitSpecTestCase(TestCase):
    def test_validation(self):
        self.assertEqual(SplitSpec.from_floats(0.01, 0.02, 6).as_dict(), {'eps1': 0.01, 'eps2': 0.02, 'order': 6})
        with self.assertRaises(ValueError):
            SplitSpec.from_floats(0, 0.1)
        with self.assertRaises(ValueError):
            SplitSpec.from_floats(2.0, 1.5)
        with self.assertRaises(ValueError):
            SplitSpec.from_floats(0.1, 0.1, order=1)
        with self.assertRaises(ValueError):
            SplitSpec(Interval(0.1, 0.2))


class CancelExpandTestCase(TestCase):
    def test_point_jet(self):
        y = jet_variable(0, 2)
        ratio = cancel_expand(y * (y + 1), y, drop=1)
        self.assertEqual(ratio.jet().coeffs, (Interval(1, 1), Interval(1, 1)))
        with self.assertRaises(ValueError):
            _ = ratio.window

    def test_sinc_window(self):
        order = 6
        window = Interval(-0.5, 0.5)
        y = jet_variable(0, order)
        wide = jet_variable(window, order)
        ratio = cancel_expand(jet_sin(y), y, drop=1, num_window=jet_sin(wide), den_window=wide)
        self.assertEqual(ratio.shifted_order, order - 1)
        self.assertTrue(ratio.jet().coeffs[0].contains(1))
        self.assertTrue(ratio.enclose(0.3).contains(math.sin(0.3) / 0.3))
        self.assertTrue(ratio.enclose(0).contains(1))

        e = ratio.integrate(-0.5, 0.5, tol=1e-8)
        self.assertTrue(e.value.contains(float(2 * mpmath.si(0.5))))
        self.assertLess(e.width(), 1e-6)
        with self.assertRaises(ValueError):
            ratio.enclose(0.75)

    def test_mismatch(self):
        y = jet_variable(0, 3)
        with self.assertRaises(CancellationOrderMismatch):
            cancel_expand(y + 1, y, drop=1)
        with self.assertRaises(CancellationOrderMismatch):
            cancel_expand(y * y, y * y, drop=1)
        with self.assertRaises(CancellationOrderMismatch):
            cancel_expand(y, y, drop=3)
        with self.assertRaises(ValueError):
            cancel_expand(y, jet_variable(0, 2), drop=1)
        with self.assertRaises(ValueError):
            cancel_expand(y, y, drop=1, num_window=jet_variable(Interval(-1, 1), 3))
