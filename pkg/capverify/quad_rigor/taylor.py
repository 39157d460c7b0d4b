import logging

from capverify.interval_core import ZERO, Interval
from capverify.quad_rigor.enclosure import Enclosure
from capverify.quad_rigor.integrands import split_thick_bounds
from capverify.quad_rigor.moments import coefficient_moment, power_moment
from capverify.taylor_ad import JetFunction, jet_eval_remainder
from capverify.taylor_ad.remainder import CenterType


logger = logging.getLogger(__name__)


def taylor_panel(f: JetFunction, lo: float, hi: float, order: int, center: CenterType) -> tuple[Interval, Interval]:
    """
    (main, error) of the integral over one panel: the degree order - 1 Taylor polynomial at the
    center integrated term by term, plus the order-th coefficient over the panel as Lagrange term.
    """
    panel = Interval(lo, hi)
    expansion = jet_eval_remainder(f, panel, order - 1, center=center)
    u0 = Interval.point(lo) - expansion.center
    u1 = Interval.point(hi) - expansion.center
    main = ZERO
    for k, coeff in enumerate(expansion.coeffs):
        main = main + coeff * power_moment(k, u0, u1)
    error = coefficient_moment(expansion.remainder, order, u0, u1)
    return main, error


def integrate_taylor(
    f: JetFunction,
    a: Interval | float,
    b: Interval | float,
    order: int,
    center: CenterType = 'left',
    panels: int = 1,
) -> Enclosure:
    """
    Taylor integration: `order` counts the terms including the Lagrange remainder term.

    >>> from capverify.taylor_ad import jet_exp
    >>> e = integrate_taylor(jet_exp, 0, 1, order=3)
    >>> round(e.value.lo, 5), round(e.value.hi, 5)
    (1.70833, 1.77993)
    """
    if order < 1:
        raise ValueError(f'Taylor integration needs order >= 1, got {order}')
    if panels < 1:
        raise ValueError(f'Need at least one panel, got {panels}')
    a = Interval.point(a)
    b = Interval.point(b)
    lo, hi, sliver = split_thick_bounds(f, a, b)
    main = ZERO
    error = sliver
    if hi > lo:
        for panel in Interval(lo, hi).subdivide(panels):
            panel_main, panel_error = taylor_panel(f, panel.lo, panel.hi, order, center)
            main = main + panel_main
            error = error + panel_error
    logger.debug(f'Taylor order {order} on {panels} panels: {main} + {error}')
    return Enclosure.build(main, error, cells=panels, scheme=f'taylor{order}')
