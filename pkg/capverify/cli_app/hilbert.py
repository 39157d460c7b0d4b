import logging
import time

import mpmath
from cli_base.cli_tools.verbosity import setup_logging
from cli_base.tyro_commands import TyroVerbosityArgType
from rich import print  # noqa

from capverify.cli_app import app
from capverify.cli_app.output import check_reference, finish
from capverify.cli_app.settings import get_user_settings
from capverify.errors import BudgetExhausted
from capverify.expressions import get_expression
from capverify.interval_core import Interval
from capverify.quad_rigor.adaptive import DEFAULT_BUDGET
from capverify.reporting import ProofReport
from capverify.singular_quad import SplitSpec, hilbert_transform
from capverify.user_settings import HilbertSettings
from capverify.utilities import print_exception_decorator


logger = logging.getLogger(__name__)


def reference_hilbert(truth, x: float) -> float:
    """
    Floating point value of (1/pi) int_{-pi}^{pi} (f(x) - f(x-y)) / (2 tan(y/2)) dy by mpmath.
    The nodes never hit y = 0.
    """
    fx = truth(mpmath.mpf(x))

    def integrand(y):
        return (fx - truth(x - y)) / (2 * mpmath.tan(y / 2))

    return float(mpmath.quad(integrand, [-mpmath.pi, 0, mpmath.pi]) / mpmath.pi)


def hilbert_report(func: str, x: str, settings: HilbertSettings, budget: int = DEFAULT_BUDGET) -> ProofReport:
    """
    >>> report = hilbert_report('sin', '0.5', HilbertSettings())
    >>> report.status, report.result('reference')['inside']
    (<Status.PASS: 'PASS'>, True)
    """
    start = time.monotonic()
    expression = get_expression(func)
    point = Interval.parse(x)
    spec = SplitSpec.from_floats(settings.eps1, settings.eps2, settings.order)
    report = ProofReport(
        command='hilbert',
        settings={'func': func, 'x': point, 'split': spec.as_dict(), 'tol': settings.tol, 'budget': budget},
    )
    if not expression.periodic:
        logger.warning(f'{func!r} is not 2pi periodic: the result is the principal value integral only')

    exhausted = False
    try:
        enclosure = hilbert_transform(expression.func, point, spec=spec, tol=settings.tol, budget=budget)
    except BudgetExhausted as err:
        logger.warning(str(err))
        enclosure = err.enclosure
        exhausted = True

    reference = reference_hilbert(expression.truth, point.mid)
    report.add('hilbert', enclosure, budget_exhausted=exhausted)
    inside, report.status = check_reference(enclosure.value, reference, exhausted)
    report.add('reference', float=reference, inside=inside)
    report.wall_time = time.monotonic() - start
    return report


@app.command
@print_exception_decorator
def hilbert(
    func: str = 'sin',
    x: str = '0.5',
    eps1: float | None = None,
    eps2: float | None = None,
    order: int | None = None,
    tol: float | None = None,
    verbosity: TyroVerbosityArgType = 1,
):
    """
    Rigorous enclosure of the periodic Hilbert transform of a named expression at x,
    split in a near, central and far part.
    """
    setup_logging(verbosity=verbosity)
    user_settings = get_user_settings(verbosity=verbosity)
    settings = user_settings.hilbert
    for name, value in (('eps1', eps1), ('eps2', eps2), ('order', order), ('tol', tol)):
        if value is not None:
            setattr(settings, name, value)
    report = hilbert_report(func, x, settings, budget=user_settings.quadrature.budget)
    finish(report, user_settings.report.output_dir)
