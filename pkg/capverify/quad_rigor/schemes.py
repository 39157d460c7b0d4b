"""
Composite Newton-Cotes rules with rigorous error terms:

    scheme      rule on [x0, x1], h = x1 - x0           error term
    midpoint    h * f(m)                                 + h**3 / 24 * f''(xi)
    trapezoid   h / 2 * (f(x0) + f(x1))                  - h**3 / 12 * f''(xi)
    simpson     h / 6 * (f(x0) + 4 f(m) + f(x1))         - h**5 / 2880 * f''''(xi)

Derivatives are enclosed by jets, either per panel or once over the whole [a, b].
The floating point midpoint m of a panel is not always its exact center, the midpoint rule
therefore uses f(m) h + f'(m) M1 + (f)_2 M2 with the exact moments M1, M2 around m.
"""

import logging
from typing import Literal

from capverify.interval_core import ZERO, Interval
from capverify.quad_rigor.enclosure import Enclosure
from capverify.quad_rigor.integrands import split_thick_bounds, value_enclosure
from capverify.quad_rigor.moments import coefficient_moment, power_moment
from capverify.quad_rigor.taylor import taylor_panel
from capverify.taylor_ad import JetFunction, evaluate_jet


logger = logging.getLogger(__name__)

SchemeType = Literal['midpoint', 'trapezoid', 'simpson']
DerivativeBoundType = Literal['panel', 'global']

SCHEME_DERIVATIVE_ORDER = {
    'midpoint': 2,
    'trapezoid': 2,
    'simpson': 4,
}


def _coefficient(f: JetFunction, base: Interval, k: int) -> Interval:
    return evaluate_jet(f, base, k).coeffs[k]


def _exact_center(x0: float, x1: float) -> Interval | None:
    center = (Interval.point(x0) + x1) / 2
    if center.is_thin:
        return center
    return None


def _midpoint_panel(f: JetFunction, x0: float, x1: float, c2: Interval) -> tuple[Interval, Interval]:
    m = Interval(x0, x1).midpoint()
    u0 = Interval.point(x0) - m
    u1 = Interval.point(x1) - m
    jet = evaluate_jet(f, m, 1)
    main = jet.coeffs[0] * (u1 - u0)
    error = jet.coeffs[1] * power_moment(1, u0, u1) + coefficient_moment(c2, 2, u0, u1)
    return main, error


def _trapezoid_panel(f: JetFunction, x0: float, x1: float, c2: Interval) -> tuple[Interval, Interval]:
    h = Interval(x0, x1).width()
    main = (value_enclosure(f, x0) + value_enclosure(f, x1)) * h / 2
    # -h**3/12 * f'' with f'' = 2 * (f)_2
    error = -(h**3) * c2 / 6
    return main, error


def _simpson_panel(f: JetFunction, x0: float, x1: float, c4: Interval) -> tuple[Interval, Interval]:
    center = _exact_center(x0, x1)
    if center is None:
        logger.debug(f'Panel [{x0}, {x1}] has no exact center, use a Taylor panel')
        return taylor_panel(f, x0, x1, order=4, center='midpoint')
    h = Interval(x0, x1).width()
    main = (value_enclosure(f, x0) + value_enclosure(f, center) * 4 + value_enclosure(f, x1)) * h / 6
    # -h**5/2880 * f'''' with f'''' = 24 * (f)_4
    error = -(h**5) * c4 / 120
    return main, error


def integrate_scheme(
    f: JetFunction,
    a: Interval | float,
    b: Interval | float,
    scheme: SchemeType,
    n: int,
    derivative_bound: DerivativeBoundType = 'panel',
) -> Enclosure:
    """
    >>> from capverify.taylor_ad import jet_exp
    >>> e = integrate_scheme(jet_exp, 0, 1, 'trapezoid', 4, derivative_bound='global')
    >>> round(e.value.lo, 4), round(e.value.hi, 4)
    (1.7131, 1.722)
    """
    if n < 1:
        raise ValueError(f'Need at least one panel, got {n}')
    try:
        derivative_order = SCHEME_DERIVATIVE_ORDER[scheme]
    except KeyError:
        raise ValueError(f'Unknown scheme {scheme!r}') from None
    if derivative_bound not in ('panel', 'global'):
        raise ValueError(f'Unknown derivative bound {derivative_bound!r}')

    a = Interval.point(a)
    b = Interval.point(b)
    lo, hi, sliver = split_thick_bounds(f, a, b)
    main = ZERO
    error = sliver
    if hi > lo:
        global_coeff = None
        if derivative_bound == 'global':
            global_coeff = _coefficient(f, Interval(lo, hi), derivative_order)
        for panel in Interval(lo, hi).subdivide(n):
            coeff = global_coeff
            if coeff is None:
                coeff = _coefficient(f, panel, derivative_order)
            if scheme == 'midpoint':
                panel_main, panel_error = _midpoint_panel(f, panel.lo, panel.hi, coeff)
            elif scheme == 'trapezoid':
                panel_main, panel_error = _trapezoid_panel(f, panel.lo, panel.hi, coeff)
            else:
                panel_main, panel_error = _simpson_panel(f, panel.lo, panel.hi, coeff)
            main = main + panel_main
            error = error + panel_error
    logger.debug(f'{scheme} rule on {n} panels: {main} + {error}')
    return Enclosure.build(main, error, cells=n, scheme=scheme)
