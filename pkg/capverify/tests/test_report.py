import json
import tempfile
from pathlib import Path
from unittest import TestCase

from capverify import __version__
from capverify.constants import EXIT_FAIL, EXIT_PASS, EXIT_UNKNOWN
from capverify.interval_core import Interval
from capverify.quad_rigor import Enclosure
from capverify.reporting import ProofReport, Status, status_from_checks, strict_sign


class StatusTestCase(TestCase):
    def test_exit_codes(self):
        self.assertEqual(Status.PASS.exit_code, EXIT_PASS)
        self.assertEqual(Status.FAIL.exit_code, EXIT_FAIL)
        self.assertEqual(Status.UNKNOWN.exit_code, EXIT_UNKNOWN)
        self.assertEqual((EXIT_PASS, EXIT_FAIL, EXIT_UNKNOWN), (0, 1, 2))

    def test_status_from_checks(self):
        self.assertEqual(status_from_checks([True, True]), Status.PASS)
        self.assertEqual(status_from_checks([True, None]), Status.UNKNOWN)
        self.assertEqual(status_from_checks([None, False, True]), Status.FAIL)
        self.assertEqual(status_from_checks(iter([True])), Status.PASS)

    def test_strict_sign(self):
        self.assertEqual(strict_sign(Interval(0.5, 1)), 1)
        self.assertEqual(strict_sign(Interval(-1, -0.5)), -1)
        self.assertEqual(strict_sign(Interval(0, 1)), 0)
        self.assertEqual(strict_sign(Interval(-1, 0)), 0)


class ProofReportTestCase(TestCase):
    def build_report(self) -> ProofReport:
        report = ProofReport(command='quad', settings={'a': Interval(0, 0), 'tol': 1e-8})
        report.add('integral', Enclosure.build(Interval(1, 2), Interval(-0.5, 0.5), scheme='demo'), exhausted=False)
        report.add('reference', float=1.5, inside=True)
        report.status = Status.PASS
        report.wall_time = 0.25
        return report

    def test_json(self):
        report = self.build_report()
        data = json.loads(report.to_json())
        self.assertEqual(data['tool_version'], __version__)
        self.assertEqual(data['status'], 'PASS')
        self.assertEqual(data['settings'], {'a': '[0,0]', 'tol': 1e-8})
        self.assertIsNone(data['determinism_seed'])
        integral = data['results'][0]
        self.assertEqual(integral['name'], 'integral')
        self.assertEqual(integral['value']['value'], '[0.5,2.5]')
        self.assertEqual(integral['value']['scheme'], 'demo')
        self.assertEqual(report.result('reference'), {'name': 'reference', 'float': 1.5, 'inside': True})
        with self.assertRaises(KeyError):
            report.result('nope')

        self.assertNotIn('wall_time', json.loads(report.to_json(include_wall_time=False)))
        # stable output: the same report gives the same bytes
        self.assertEqual(report.to_json(), self.build_report().to_json())

    def test_round_trip(self):
        report = self.build_report()
        restored = ProofReport.from_json(report.to_json())
        self.assertEqual(restored.status, Status.PASS)
        self.assertEqual(restored.exit_code, 0)
        self.assertEqual(restored.results, json.loads(report.to_json())['results'])
        self.assertEqual(restored.to_json(), report.to_json())

    def test_write(self):
        report = self.build_report()
        with tempfile.TemporaryDirectory() as temp_dir:
            path = report.write(Path(temp_dir) / 'sub' / 'report.json')
            self.assertEqual(path.read_text(encoding='utf-8'), report.to_json())
