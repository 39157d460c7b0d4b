"""
    Floating point pathologies next to their rigorous interval counterpart.
"""

import logging
import time
from fractions import Fraction
from typing import Literal

import mpmath
from cli_base.cli_tools.verbosity import setup_logging
from cli_base.tyro_commands import TyroVerbosityArgType
from rich import print  # noqa
from tyro.conf import Positional

from capverify.cli_app import app
from capverify.cli_app.output import finish
from capverify.cli_app.settings import get_user_settings
from capverify.interval_core import ONE, ZERO, Interval
from capverify.reporting import ProofReport, Status
from capverify.utilities import print_exception_decorator
from capverify.utilities.binary_format import format_binary, round_rational


logger = logging.getLogger(__name__)

TRUTH_DIGITS = 40
DEFAULT_HARMONIC_TERMS = 1_000_000
DEFAULT_ROUNDING_BITS = 10


def _contains(value: Interval, truth) -> bool:
    return mpmath.mpf(value.lo) <= truth <= mpmath.mpf(value.hi)


def harmonic_report(n: int) -> ProofReport:
    """
    Sum 1/k for k = 1..n forward and backward in floating point and once in interval arithmetic.

    >>> report = harmonic_report(1)
    >>> report.status, report.result('forward')['float']
    (<Status.PASS: 'PASS'>, 1.0)
    """
    if n < 1:
        raise ValueError(f'Need at least one term, got {n}')
    start = time.monotonic()
    report = ProofReport(command='demo harmonic', settings={'n': n})

    forward = 0.0
    for k in range(1, n + 1):
        forward += 1.0 / k
    backward = 0.0
    for k in range(n, 0, -1):
        backward += 1.0 / k
    rigorous = ZERO
    for k in range(n, 0, -1):
        rigorous = rigorous + ONE / k

    with mpmath.workdps(TRUTH_DIGITS):
        truth = mpmath.harmonic(n)
        contains_truth = _contains(rigorous, truth)
        report.add('forward', float=forward, inside=rigorous.contains(forward))
        report.add('backward', float=backward, inside=rigorous.contains(backward))
        report.add('interval', rigorous, width=rigorous.width_up(), contains_truth=contains_truth)
        report.add('truth', digits=mpmath.nstr(truth, TRUTH_DIGITS - 5))

    report.status = Status.PASS if contains_truth else Status.FAIL
    report.wall_time = time.monotonic() - start
    logger.info(f'H({n}): forward={forward!r} backward={backward!r} interval={rigorous}')
    return report


def rounding_report(a: str, b: str, bits: int = DEFAULT_ROUNDING_BITS) -> ProofReport:
    """
    Add two decimals: rounded down and up to `bits` significant bits, and as binary64 interval.

    >>> report = rounding_report('0.1', '1')
    >>> report.result('down')['binary'], report.result('up')['binary']
    ('1.000110011p+0', '1.000110100p+0')
    >>> rounding_report('0.5', '0.25').result('directed')['differ']
    False
    """
    start = time.monotonic()
    report = ProofReport(command='demo rounding', settings={'a': a, 'b': b, 'bits': bits})
    exact = Fraction(a) + Fraction(b)
    down = round_rational(exact, bits, 'f')
    up = round_rational(exact, bits, 'c')
    rigorous = Interval.from_decimal(a) + Interval.from_decimal(b)

    differ = down != up
    contains_exact = Fraction(rigorous.lo) <= exact <= Fraction(rigorous.hi)
    bracketed = bool(down <= mpmath.mpf(rigorous.lo) and mpmath.mpf(rigorous.hi) <= up)
    report.add('down', binary=format_binary(down, bits), decimal=mpmath.nstr(down, 17))
    report.add('up', binary=format_binary(up, bits), decimal=mpmath.nstr(up, 17))
    report.add('directed', differ=differ)
    report.add('interval', rigorous, contains_exact=contains_exact, inside_directed=bracketed)

    report.status = Status.PASS if contains_exact else Status.FAIL
    report.wall_time = time.monotonic() - start
    return report


@app.command
@print_exception_decorator
def demo(
    which: Positional[Literal['harmonic', 'rounding']],
    n: int = DEFAULT_HARMONIC_TERMS,
    a: str = '0.1',
    b: str = '1',
    bits: int = DEFAULT_ROUNDING_BITS,
    verbosity: TyroVerbosityArgType = 1,
):
    """
    Floating point pathologies: "harmonic" sums 1/k forward and backward, "rounding" adds two decimals
    with directed rounding at a small binary precision.
    """
    setup_logging(verbosity=verbosity)
    user_settings = get_user_settings(verbosity=verbosity)
    if which == 'harmonic':
        report = harmonic_report(n)
    else:
        report = rounding_report(a, b, bits)
    finish(report, user_settings.report.output_dir)
