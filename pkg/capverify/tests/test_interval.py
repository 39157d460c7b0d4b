import math
import random
from fractions import Fraction
from unittest import TestCase

import mpmath

from capverify.errors import DivisionByZeroInterval, DomainViolation, InvalidInterval
from capverify.interval_core import (
    PI,
    Interval,
    IntervalVec,
    cos,
    cosh,
    cot,
    elementary,
    exp,
    format_compressed,
    parse_compressed,
    sin,
    sinh,
    sqr,
    sqrt,
    tan,
)
from capverify.utilities.fuzz import containment_fuzz


class IntervalArithmeticTestCase(TestCase):
    def test_subdistributivity(self):
        x = Interval(3, 4)
        self.assertEqual(x * (Interval(1, 2) + Interval(-1, 1)), Interval(0, 12))
        self.assertEqual(x * Interval(1, 2) + x * Interval(-1, 1), Interval(-1, 12))

    def test_dependency_problem(self):
        D = Interval(-1, 1)
        self.assertEqual(sqr(D), Interval(0, 1))
        self.assertEqual(D * D, Interval(-1, 1))
        self.assertEqual(1 - sqr(D), Interval(0, 1))
        self.assertEqual(1 - D * D, Interval(0, 2))
        self.assertEqual((1 + D) * (1 - D), Interval(0, 4))

    def test_trivial(self):
        self.assertEqual(Interval(1, 2) + Interval(3, 4), Interval(4, 6))
        self.assertEqual(Interval(0, 1) - Interval(0, 1), Interval(-1, 1))
        self.assertEqual(Interval(-1, 12).width(), Interval(13, 13))
        self.assertEqual(Interval(0, 1).subdivide(2), [Interval(0, 0.5), Interval(0.5, 1)])
        self.assertEqual(Interval(0, 2).intersect(Interval(1, 3)), Interval(1, 2))
        self.assertIsNone(Interval(0, 1).intersect(Interval(2, 3)))
        self.assertEqual(Interval(0, 1).hull(Interval(2, 3)), Interval(0, 3))
        self.assertEqual(Interval(-3, 2).magnitude(), 3.0)
        self.assertEqual(Interval(-3, 2).mignitude(), 0.0)
        self.assertTrue(Interval(0, 1).contains(0.5))

    def test_outward_rounding(self):
        third = Interval(1, 1) / 3
        self.assertLess(third.lo, third.hi)
        self.assertTrue(Fraction(third.lo) <= Fraction(1, 3) <= Fraction(third.hi))
        self.assertEqual(math.nextafter(third.lo, math.inf), third.hi)

        tenth = Interval.from_decimal('0.1')
        self.assertTrue(Fraction(tenth.lo) <= Fraction(1, 10) <= Fraction(tenth.hi))

    def test_errors(self):
        with self.assertRaises(InvalidInterval):
            Interval(2, 1)
        with self.assertRaises(InvalidInterval):
            Interval(math.nan, 1)
        with self.assertRaises(DivisionByZeroInterval):
            Interval(1, 2) / Interval(-1, 1)
        with self.assertRaises(DomainViolation):
            sqrt(Interval(-1, 1))
        with self.assertRaises(DomainViolation):
            tan(Interval(1, 2))  # pi/2 inside
        with self.assertRaises(DomainViolation):
            cot(Interval(-0.5, 0.5))

    def test_vector(self):
        v = IntervalVec.from_values([1, 2, Interval(-1, 1)])
        self.assertEqual(v.dot(v), Interval(4, 6))  # [-1,1] * [-1,1] is [-1,1]
        with self.assertRaises(ValueError):
            v + IntervalVec.zeros(2)


class ElementaryTestCase(TestCase):
    def test_exp(self):
        value = exp(Interval(0, 1))
        self.assertTrue(value.contains(1))
        self.assertLessEqual(value.lo, 1.0)
        with mpmath.workdps(40):
            self.assertTrue(mpmath.mpf(value.lo) <= mpmath.e <= mpmath.mpf(value.hi))
        self.assertLessEqual(value.hi - math.e, math.e * 2.0**-48)

        point = exp(1.0)
        self.assertLessEqual(point.width_up(), 1e-12)

    def test_exp_range_limits(self):
        value = exp(709.5)
        self.assertTrue(value.is_bounded)
        with mpmath.workdps(30):
            self.assertTrue(mpmath.mpf(value.lo) <= mpmath.exp(mpmath.mpf(709.5)) <= mpmath.mpf(value.hi))
        with self.assertRaises(DomainViolation):
            exp(710.0)

    def test_hyperbolic_overflow(self):
        for x in (-745.0, 745.0):
            with self.assertRaises(DomainViolation):
                sinh(x)
            with self.assertRaises(DomainViolation):
                cosh(x)
        with mpmath.workdps(30):
            for x in (-700.0, -3.0, 0.5, 700.0):
                value = sinh(x)
                self.assertTrue(mpmath.mpf(value.lo) <= mpmath.sinh(mpmath.mpf(x)) <= mpmath.mpf(value.hi), f'{x=}')
                value = cosh(x)
                self.assertTrue(mpmath.mpf(value.lo) <= mpmath.cosh(mpmath.mpf(x)) <= mpmath.mpf(value.hi), f'{x=}')

    def test_periodic_sweep(self):
        value = cos(Interval(0, math.pi))
        self.assertTrue(value.contains(1))
        self.assertLessEqual(value.lo, -0.999999)
        self.assertTrue(value.subset(Interval(-1, 1)))

        value = sin(PI / 2)
        self.assertTrue(value.contains(1))
        self.assertLessEqual(value.hi, 1.0)

    def test_dispatch(self):
        self.assertEqual(elementary('sqr', Interval(-2, 1)), Interval(0, 4))
        self.assertEqual(elementary('pow_int', Interval(-2, 1), k=3), Interval(-8, 1))
        with self.assertRaises(ValueError):
            elementary('gamma', Interval(1, 2))

    def test_against_mpmath(self):
        rng = random.Random(1)
        with mpmath.workdps(40):
            for _ in range(200):
                x = rng.uniform(-10, 10)
                for name, truth in (('exp', mpmath.exp), ('sin', mpmath.sin), ('atan', mpmath.atan)):
                    value = elementary(name, x)
                    self.assertTrue(
                        mpmath.mpf(value.lo) <= truth(mpmath.mpf(x)) <= mpmath.mpf(value.hi),
                        f'{name}({x!r}) not in {value}',
                    )

    def test_containment_fuzz(self):
        result = containment_fuzz(samples=2_000, seed=42)
        self.assertEqual(result.failures, [])
        self.assertGreater(result.checked, 4_000)


class FormattingTestCase(TestCase):
    def test_compressed(self):
        self.assertEqual(format_compressed(Interval(123456, 123789), digits=3), '123^456_789')
        self.assertEqual(format_compressed(Interval(5, 5)), '5')
        text = format_compressed(Interval(1.70833, 1.77994), digits=1)
        self.assertEqual(text, '1.7^0833_7994')
        self.assertTrue(Interval(1.70833, 1.77994).subset(parse_compressed(text)))

    def test_literal(self):
        x = Interval(1, 1) / 3
        self.assertEqual(Interval.parse(x.to_literal(), outward=False), x)
        self.assertEqual(Interval.parse('[1, 2.5]'), Interval(1, 2.5))
        with self.assertRaises(ValueError):
            format_compressed(x, digits=0)
