import logging
import sys
from pathlib import Path

from rich import print  # noqa
from rich.table import Table

from capverify.interval_core import Interval
from capverify.reporting import ProofReport, Status


logger = logging.getLogger(__name__)

STATUS_STYLE = {Status.PASS: 'green', Status.FAIL: 'red', Status.UNKNOWN: 'yellow'}
REFERENCE_SLACK = 1e-12


def check_reference(value: Interval, reference: float, exhausted: bool) -> tuple[bool, Status]:
    """
    The mpmath reference is no proof, but a rigorous enclosure must not miss it.

    >>> check_reference(Interval(1, 2), 1.5, exhausted=True)
    (True, <Status.UNKNOWN: 'UNKNOWN'>)
    >>> check_reference(Interval(1, 2), 3.0, exhausted=False)
    (False, <Status.FAIL: 'FAIL'>)
    """
    slack = REFERENCE_SLACK * max(1.0, abs(reference))
    inside = value.intersects(Interval(reference - slack, reference + slack))
    if not inside:
        logger.error(f'Reference {reference!r} lies outside of {value}')
        return False, Status.FAIL
    return True, Status.UNKNOWN if exhausted else Status.PASS


def report_path(output_dir: str | Path, command: str) -> Path:
    """
    >>> report_path('/tmp/reports', 'verify muskat-t1')
    PosixPath('/tmp/reports/verify_muskat-t1.json')
    """
    return Path(output_dir).expanduser() / f'{command.replace(" ", "_")}.json'


def _details(entry: dict) -> str:
    return ', '.join(f'{key}={value}' for key, value in entry.items() if key not in ('name', 'value'))


def print_report(report: ProofReport) -> None:
    style = STATUS_STYLE[report.status]
    table = Table(title=f'{report.command}: [{style}]{report.status}[/{style}] ({report.wall_time:.1f} sec.)')
    table.add_column('Name')
    table.add_column('Value')
    table.add_column('Details')
    for entry in report.results:
        value = entry.get('value', '')
        if isinstance(value, dict):
            value = value.get('value', '')
        table.add_row(entry['name'], str(value), _details(entry))
    print(table)


def finish(report: ProofReport, output_dir: str | Path | None) -> None:
    """
    Print the report, store it as JSON and exit with the code of its status.
    """
    print_report(report)
    if output_dir:
        path = report.write(report_path(output_dir, report.command))
        print(f'Report written to: [bold]{path}')
    sys.exit(report.exit_code)
