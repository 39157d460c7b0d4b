import contextlib
import dataclasses
import io
import json
import random
import tempfile
from fractions import Fraction
from pathlib import Path
from unittest import TestCase
from unittest.mock import patch

import mpmath

from capverify.cli_app.demo import harmonic_report, rounding_report
from capverify.cli_app.hilbert import hilbert_report, reference_hilbert
from capverify.cli_app.output import check_reference, finish, report_path
from capverify.cli_app.quad import quad_report
from capverify.interval_core import Interval
from capverify.reporting import Status
from capverify.user_settings import SETTINGS_VERSION, HilbertSettings, QuadratureSettings, UserSettings
from capverify.utilities.binary_format import format_binary, round_rational


class DemoTestCase(TestCase):
    def test_harmonic(self):
        report = harmonic_report(1000)
        self.assertEqual(report.status, Status.PASS)
        self.assertTrue(report.result('interval')['contains_truth'])
        forward = report.result('forward')['float']
        backward = report.result('backward')['float']
        self.assertAlmostEqual(forward, backward, places=12)
        self.assertTrue(report.result('truth')['digits'].startswith('7.4854708605503449'))
        with self.assertRaises(ValueError):
            harmonic_report(0)

    def test_rounding(self):
        report = rounding_report('0.1', '1')
        self.assertEqual(report.status, Status.PASS)
        self.assertEqual(report.result('down')['binary'], '1.000110011p+0')
        self.assertEqual(report.result('up')['binary'], '1.000110100p+0')
        self.assertTrue(report.result('directed')['differ'])
        self.assertTrue(report.result('interval')['inside_directed'])

        exact = rounding_report('0.5', '0.25')
        self.assertFalse(exact.result('directed')['differ'])
        self.assertEqual(exact.result('down')['binary'], '1.100000000p-1')

    def test_random_rationals(self):
        rng = random.Random(0)
        for _ in range(100):
            a = f'{rng.randint(-999, 999) / 100:.2f}'
            b = f'{rng.randint(1, 9999) / 1000:.3f}'
            report = rounding_report(a, b, bits=12)
            self.assertEqual(report.status, Status.PASS, f'{a} + {b}')
            exact = Fraction(a) + Fraction(b)
            down = round_rational(exact, 12, 'f')
            up = round_rational(exact, 12, 'c')
            self.assertTrue(down <= mpmath.mpf(exact.numerator) / exact.denominator <= up)

    def test_format_binary(self):
        self.assertEqual(format_binary(mpmath.mpf(0), 4), '0.000p+0')
        self.assertEqual(format_binary(mpmath.mpf(1), 4), '1.000p+0')
        self.assertEqual(format_binary(mpmath.mpf(10), 4), '1.010p+3')
        with self.assertRaises(ValueError):
            format_binary(mpmath.mpf(1.5), 1)
        with self.assertRaises(ValueError):
            round_rational(Fraction(1, 3), 1, 'n')


class QuadHilbertReportTestCase(TestCase):
    def test_quad_taylor(self):
        report = quad_report('exp', '0', '1', 'taylor', QuadratureSettings(), order=3)
        self.assertEqual(report.status, Status.PASS)
        value = Interval.parse(report.result('integral')['value']['value'], outward=False)
        self.assertAlmostEqual(value.lo, 1.70833, delta=1e-4)
        self.assertAlmostEqual(value.hi, 1.77994, delta=1e-4)
        self.assertTrue(report.result('reference')['inside'])
        self.assertEqual(report.settings['method'], 'taylor')

    def test_quad_methods(self):
        settings = QuadratureSettings(tol=1e-8)
        for method in ('adaptive', 'midpoint', 'trapezoid', 'simpson'):
            report = quad_report('runge', '-1', '1', method, settings, panels=16)
            self.assertEqual(report.status, Status.PASS, method)
            self.assertTrue(report.result('reference')['inside'], method)

    def test_quad_budget(self):
        report = quad_report('exp', '0', '1', 'adaptive', QuadratureSettings(tol=1e-15, budget=2), order=2)
        self.assertEqual(report.status, Status.UNKNOWN)
        self.assertTrue(report.result('integral')['budget_exhausted'])
        self.assertEqual(report.exit_code, 2)

    def test_quad_errors(self):
        with self.assertRaises(ValueError):
            quad_report('exp', '0', '1', 'taylor', QuadratureSettings(), order=0)
        with self.assertRaises(KeyError):
            quad_report('nope', '0', '1', 'taylor', QuadratureSettings())

    def test_hilbert(self):
        report = hilbert_report('sin', '0.5', HilbertSettings())
        self.assertEqual(report.status, Status.PASS)
        self.assertTrue(report.result('reference')['inside'])
        self.assertEqual(report.settings['split']['order'], HilbertSettings().order)

        report = hilbert_report('cos_ratio', '1', HilbertSettings())
        self.assertTrue(report.result('reference')['inside'])

    def test_reference_outside(self):
        with patch('capverify.cli_app.quad.reference_value', return_value=5.0):
            report = quad_report('exp', '0', '1', 'taylor', QuadratureSettings(), order=3)
        self.assertEqual(report.status, Status.FAIL)
        self.assertFalse(report.result('reference')['inside'])
        self.assertEqual(report.exit_code, 1)

        with patch('capverify.cli_app.hilbert.reference_hilbert', return_value=-1.0):
            report = hilbert_report('sin', '0.5', HilbertSettings())
        self.assertEqual(report.status, Status.FAIL)

        self.assertEqual(check_reference(Interval(1, 2), 2.0 + 1e-14, exhausted=False), (True, Status.PASS))

    def test_reference_hilbert(self):
        self.assertAlmostEqual(reference_hilbert(mpmath.sin, 0.5), 0.8775825618903728, places=10)
        self.assertAlmostEqual(reference_hilbert(mpmath.cos, 0.5), -0.479425538604203, places=10)


class OutputTestCase(TestCase):
    def test_report_path(self):
        self.assertEqual(report_path('/tmp/out', 'demo harmonic'), Path('/tmp/out/demo_harmonic.json'))

    def test_finish(self):
        report = rounding_report('0.1', '1')
        with tempfile.TemporaryDirectory() as temp_dir:
            buffer = io.StringIO()
            with contextlib.redirect_stdout(buffer), self.assertRaises(SystemExit) as cm:
                finish(report, temp_dir)
            self.assertEqual(cm.exception.code, 0)
            self.assertIn('demo rounding', buffer.getvalue())

            path = Path(temp_dir) / 'demo_rounding.json'
            self.assertEqual(json.loads(path.read_text(encoding='utf-8'))['status'], 'PASS')

        report.status = Status.FAIL
        with contextlib.redirect_stdout(io.StringIO()), self.assertRaises(SystemExit) as cm:
            finish(report, None)
        self.assertEqual(cm.exception.code, 1)


class UserSettingsTestCase(TestCase):
    def test_defaults(self):
        settings = UserSettings()
        self.assertEqual(settings.settings_version, SETTINGS_VERSION)
        self.assertEqual(
            list(dataclasses.asdict(settings)),
            ['settings_version', 'quadrature', 'hilbert', 'muskat', 'spectral', 'report'],
        )
        self.assertEqual(settings.hilbert.eps1, 1e-3)
        self.assertEqual(settings.hilbert.order, 8)
        self.assertEqual(settings.quadrature.max_jet_order, 16)
        self.assertLess(settings.spectral.a_inner, settings.spectral.a_outer)
        self.assertTrue(settings.muskat.audit)
        self.assertLess(settings.muskat.scan_budget, settings.muskat.budget)
