import logging
import time
from typing import Literal

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
from capverify.quad_rigor import Enclosure, integrate_adaptive, integrate_scheme, integrate_taylor
from capverify.reporting import ProofReport
from capverify.user_settings import QuadratureSettings
from capverify.utilities import print_exception_decorator


logger = logging.getLogger(__name__)

MethodType = Literal['adaptive', 'taylor', 'midpoint', 'trapezoid', 'simpson']


def reference_value(truth, a: Interval, b: Interval) -> float:
    """Floating point value by mpmath, only for comparison."""
    return float(mpmath.quad(truth, [a.mid, b.mid]))


def quad_report(
    expr: str,
    a: str,
    b: str,
    method: MethodType,
    settings: QuadratureSettings,
    order: int | None = None,
    panels: int = 1,
    derivative_bound: Literal['panel', 'global'] = 'panel',
) -> ProofReport:
    """
    >>> report = quad_report('exp', '0', '1', 'taylor', QuadratureSettings(), order=3)
    >>> value = Interval.parse(report.result('integral')['value']['value'], outward=False)
    >>> round(value.lo, 5), round(value.hi, 5), report.result('reference')['inside']
    (1.70833, 1.77993, True)
    """
    start = time.monotonic()
    expression = get_expression(expr)
    if order is None:
        order = settings.order
    if not 1 <= order <= settings.max_jet_order:
        raise ValueError(f'Order must be in 1..{settings.max_jet_order}, got {order}')
    lo = Interval.parse(a)
    hi = Interval.parse(b)
    report = ProofReport(
        command='quad',
        settings={
            'expr': expr,
            'a': lo,
            'b': hi,
            'method': method,
            'order': order,
            'panels': panels,
            'derivative_bound': derivative_bound,
            'tol': settings.tol,
            'budget': settings.budget,
        },
    )

    exhausted = False
    enclosure: Enclosure
    if method == 'adaptive':
        try:
            enclosure = integrate_adaptive(
                expression.func, lo, hi, tol=settings.tol, budget=settings.budget, order=order
            )
        except BudgetExhausted as err:
            logger.warning(str(err))
            enclosure = err.enclosure
            exhausted = True
    elif method == 'taylor':
        enclosure = integrate_taylor(expression.func, lo, hi, order=order, panels=panels)
    else:
        enclosure = integrate_scheme(expression.func, lo, hi, method, panels, derivative_bound=derivative_bound)

    reference = reference_value(expression.truth, lo, hi)
    report.add('integral', enclosure, budget_exhausted=exhausted)
    inside, report.status = check_reference(enclosure.value, reference, exhausted)
    report.add('reference', float=reference, inside=inside)
    report.wall_time = time.monotonic() - start
    return report


@app.command
@print_exception_decorator
def quad(
    expr: str = 'exp',
    a: str = '0',
    b: str = '1',
    method: MethodType = 'adaptive',
    order: int | None = None,
    panels: int = 1,
    derivative_bound: Literal['panel', 'global'] = 'panel',
    tol: float | None = None,
    budget: int | None = None,
    verbosity: TyroVerbosityArgType = 1,
):
    """
    Rigorous enclosure of the integral of a named expression over [a, b].
    Bounds may be decimals ("0.1") or intervals ("[0.1,0.2]").
    """
    setup_logging(verbosity=verbosity)
    user_settings = get_user_settings(verbosity=verbosity)
    settings = user_settings.quadrature
    if tol is not None:
        settings.tol = tol
    if budget is not None:
        settings.budget = budget
    report = quad_report(expr, a, b, method, settings, order=order, panels=panels, derivative_bound=derivative_bound)
    finish(report, user_settings.report.output_dir)
