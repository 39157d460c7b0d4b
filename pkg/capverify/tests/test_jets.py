import math
from unittest import TestCase

from capverify.errors import BaseMismatch, DivisionByZeroInterval, DomainViolation
from capverify.interval_core import Interval
from capverify.taylor_ad import (
    bivariate_seeds,
    count_coefficient_products,
    jet_constant,
    jet_derivative,
    jet_elementary,
    jet_eval_remainder,
    jet_exp,
    jet_sin_cos,
    jet_sinhc,
    jet_sqrt,
    jet_tan,
    jet_variable,
)


def assert_coefficients(test: TestCase, jet, expected):
    test.assertEqual(len(jet.coeffs), len(expected))
    for k, (coeff, value) in enumerate(zip(jet.coeffs, expected)):
        test.assertTrue(coeff.contains(value), f'coefficient {k}: {coeff} does not contain {value!r}')


class JetArithmeticTestCase(TestCase):
    def test_seeds(self):
        x = jet_variable(2, 3)
        self.assertEqual(x.coeffs, (Interval(2, 2), Interval(1, 1), Interval(0, 0), Interval(0, 0)))
        self.assertEqual(x.order, 3)
        self.assertEqual(jet_constant(5, 2).coeffs, (Interval(5, 5), Interval(0, 0), Interval(0, 0)))

    def test_product_and_power(self):
        x = jet_variable(3, 2)
        self.assertEqual((x * x).coeffs, (Interval(9, 9), Interval(6, 6), Interval(1, 1)))
        x = jet_variable(2, 3)
        self.assertEqual((x**3).coeffs, (Interval(8, 8), Interval(12, 12), Interval(6, 6), Interval(1, 1)))
        self.assertEqual(
            jet_derivative(x**3).coeffs, (Interval(12, 12), Interval(12, 12), Interval(3, 3))
        )

    def test_scalars(self):
        x = jet_variable(1, 1)
        self.assertEqual((2 * x + 1).coeffs, (Interval(3, 3), Interval(2, 2)))
        self.assertEqual((1 - x).coeffs, (Interval(0, 0), Interval(-1, -1)))
        assert_coefficients(self, 1 / (x + 1), (0.5, -0.25))

    def test_mismatch(self):
        with self.assertRaises(BaseMismatch):
            jet_variable(1, 2) + jet_variable(2, 2)
        with self.assertRaises(BaseMismatch):
            jet_variable(1, 2) * jet_variable(1, 3)
        with self.assertRaises(DivisionByZeroInterval):
            x = jet_variable(0, 2)
            (x + 1) / x
        with self.assertRaises(DomainViolation):
            jet_sqrt(jet_variable(0, 2))
        with self.assertRaises(ValueError):
            jet_elementary('gamma', jet_variable(1, 2))

    def test_product_count(self):
        with count_coefficient_products() as counter:
            _ = jet_variable(1, 2) * jet_variable(1, 2)
        self.assertEqual(counter.products, 4)

        # the recurrences stay quadratic in the order
        costs = []
        for order in (10, 20):
            with count_coefficient_products() as counter:
                jet_exp(jet_exp(jet_variable(0.5, order)))
            costs.append(counter.products)
        self.assertLess(costs[1], 5 * costs[0])


class JetFunctionsTestCase(TestCase):
    def test_exp(self):
        assert_coefficients(self, jet_exp(jet_variable(0, 4)), (1, 1, 1 / 2, 1 / 6, 1 / 24))
        e = jet_exp(jet_variable(1, 2))
        self.assertTrue(e.coeffs[2].contains(math.e / 2))

    def test_sin_cos(self):
        sin, cos = jet_sin_cos(jet_variable(0, 4))
        assert_coefficients(self, sin, (0, 1, 0, -1 / 6, 0))
        assert_coefficients(self, cos, (1, 0, -1 / 2, 0, 1 / 24))

    def test_tan(self):
        x = jet_variable(0, 5)
        assert_coefficients(self, jet_tan(x), (0, 1, 0, 1 / 3, 0, 2 / 15))
        sin, cos = jet_sin_cos(x)
        assert_coefficients(self, sin / cos, (0, 1, 0, 1 / 3, 0, 2 / 15))

    def test_sqrt(self):
        assert_coefficients(self, jet_sqrt(jet_variable(4, 2)), (2, 1 / 4, -1 / 64))

    def test_sinhc(self):
        for value in (0.0, 0.3, 2.0):
            jet = jet_sinhc(jet_variable(value, 3))
            expected = 1.0 if value == 0 else math.sinh(value) / value
            self.assertTrue(jet.coeffs[0].contains(expected), f'{value}: {jet.coeffs[0]}')
        # around zero: sinh(x)/x = 1 + x**2/6 + x**4/120
        assert_coefficients(self, jet_sinhc(jet_variable(0, 4)), (1, 0, 1 / 6, 0, 1 / 120))
        wide = jet_sinhc(jet_variable(Interval(-1.5, 1.5), 1))
        self.assertTrue(wide.coeffs[0].contains(1))
        self.assertTrue(wide.coeffs[0].contains(math.sinh(1.5) / 1.5))

    def test_bivariate(self):
        x, y = bivariate_seeds(2, 1, 3, 1)
        product = x * y
        self.assertEqual(product.coeffs[0].coeffs, (Interval(6, 6), Interval(3, 3)))
        self.assertEqual(product.coeffs[1].coeffs, (Interval(2, 2), Interval(1, 1)))


class RemainderTestCase(TestCase):
    def test_expansion_contains_function(self):
        domain = Interval(0, 1)
        for center in ('left', 'midpoint', 0.25):
            expansion = jet_eval_remainder(jet_exp, domain, order=4, center=center)
            self.assertEqual(expansion.order, 4)
            for x in (0.0, 0.1, 0.5, 0.9, 1.0):
                self.assertTrue(expansion.evaluate(x).contains(math.exp(x)), f'{center=} {x=}')
            enclosure = expansion.range_enclosure()
            self.assertTrue(enclosure.contains(1))
            self.assertTrue(enclosure.contains(math.e))

    def test_errors(self):
        with self.assertRaises(ValueError):
            jet_eval_remainder(jet_exp, Interval(0, 1), order=-1)
        with self.assertRaises(ValueError):
            jet_eval_remainder(jet_exp, Interval(0, 1), order=2, center=2.0)
        expansion = jet_eval_remainder(jet_exp, Interval(0, 1), order=2)
        with self.assertRaises(ValueError):
            expansion.evaluate(1.5)
