"""
Hilbert transform of 2pi periodic functions

    H f(x) = 1/pi * PV int_{-pi}^{pi} (f(x) - f(x-y)) / (2 tan(y/2)) dy

split into three parts:

* near |y| < eps1: 2 tan(y/2) = y (1 + c(y) y^2), the difference quotient is expanded at x
  and the remaining factor 1 / (1 + c y^2) = 1 + e(y) y^2 is bounded by an interval.
* far |y - pi| < eps2: with t = y - pi the kernel is 1/2 cot(y/2) = -t/4 + c(t) t^3.
* central: the rest, folded onto [eps1, pi - eps2] and integrated adaptively.
"""

import dataclasses
import logging

from capverify.errors import BudgetExhausted
from capverify.interval_core import ONE, PI, ZERO, Interval
from capverify.quad_rigor import (
    Enclosure,
    coefficient_moment,
    integrate_adaptive,
    power_moment,
    value_enclosure,
)
from capverify.quad_rigor.adaptive import DEFAULT_BUDGET
from capverify.singular_quad.split import SplitSpec
from capverify.taylor_ad import JetFunction, TaylorJet, as_jet, evaluate_jet, jet_cot, jet_tan


logger = logging.getLogger(__name__)

INV_PI = ONE / PI
DEFAULT_HILBERT_TOL = 1e-8


def _symmetric(eps: Interval) -> Interval:
    return Interval(-eps.hi, eps.hi)


def tan_cubic_coefficient(eps: Interval) -> Interval:
    """
    c with 2 tan(y/2) = y + c y^3 for all |y| <= eps.

    >>> tan_cubic_coefficient(Interval(1e-3, 1e-3)).contains(1 / 12)
    True
    """
    return evaluate_jet(lambda y: jet_tan(y / 2) * 2, _symmetric(eps), 3).coeffs[3]


def cot_cubic_coefficient(eps: Interval) -> Interval:
    """
    c with 1/2 cot((pi + t)/2) = -1/2 tan(t/2) = -t/4 + c t^3 for all |t| <= eps.
    """
    return evaluate_jet(lambda t: jet_tan(t / 2) * -0.5, _symmetric(eps), 3).coeffs[3]


def pv_near(f: JetFunction, x: Interval | float, spec: SplitSpec) -> Enclosure:
    """
    Near part: 1/pi * int_{|y|<eps1} (f(x) - f(x-y)) / (2 tan(y/2)) dy
    """
    x = Interval.point(x)
    K = spec.order
    eps = spec.eps1
    window = _symmetric(eps)
    u0, u1 = -eps, eps

    point = evaluate_jet(f, x, K - 1).coeffs
    remainder = evaluate_jet(f, x + window, K).coeffs[K]

    c = tan_cubic_coefficient(eps)
    # 1 / (1 + c y^2) = 1 + e y^2
    e = -c / (c * Interval(0.0, eps.hi * eps.hi) + 1)

    main = ZERO
    error = ZERO
    # (f(x) - f(x-y)) / y = sum_{k=1}^{K-1} (-1)^(k+1) f_k y^(k-1) + (-1)^(K+1) R y^(K-1)
    for k in range(1, K):
        a = point[k] if k % 2 == 1 else -point[k]
        main = main + a * power_moment(k - 1, u0, u1)
        error = error + coefficient_moment(a * e, k + 1, u0, u1)
    a = remainder if K % 2 == 1 else -remainder
    error = error + coefficient_moment(a, K - 1, u0, u1) + coefficient_moment(a * e, K + 1, u0, u1)
    return Enclosure.build(main, error, scheme='pv-near').scaled(INV_PI)


def pv_far(f: JetFunction, x: Interval | float, spec: SplitSpec) -> Enclosure:
    """
    Far part: 1/pi * int_{|y-pi|<eps2} (f(x) - f(x-y)) / (2 tan(y/2)) dy, periodicity joins both ends.
    """
    x = Interval.point(x)
    K = spec.order
    eps = spec.eps2
    window = _symmetric(eps)
    u0, u1 = -eps, eps
    opposite = x - PI

    fx = evaluate_jet(f, x, 0).coeffs[0]
    point = evaluate_jet(f, opposite, K - 1).coeffs
    remainder = evaluate_jet(f, opposite + window, K).coeffs[K]

    # g(t) = f(x) - f(x - pi - t) = sum g_k t^k + G t^K
    g = [fx - point[0]] + [point[k] if k % 2 == 1 else -point[k] for k in range(1, K)]
    G = remainder if K % 2 == 1 else -remainder

    main = ZERO
    error = ZERO
    quarter = Interval(-0.25, -0.25)
    for k, g_k in enumerate(g):
        main = main + g_k * quarter * power_moment(k + 1, u0, u1)
    error = error + coefficient_moment(G * quarter, K + 1, u0, u1)

    g_range = fx - value_enclosure(f, opposite + window)
    error = error + coefficient_moment(g_range * cot_cubic_coefficient(eps), 3, u0, u1)
    return Enclosure.build(main, error, scheme='pv-far').scaled(INV_PI)


def central_integrand(f: JetFunction, x: Interval | float) -> JetFunction:
    """
    (f(x+y) - f(x-y)) / (2 tan(y/2)) for y > 0, both halves of the central part folded.
    """
    x = Interval.point(x)

    def integrand(y: TaylorJet) -> TaylorJet:
        difference = as_jet(f(y + x), like=y) - as_jet(f(x - y), like=y)
        return difference * jet_cot(y / 2) / 2

    return integrand


def pv_central(
    f: JetFunction,
    x: Interval | float,
    spec: SplitSpec,
    tol: float = DEFAULT_HILBERT_TOL,
    budget: int = DEFAULT_BUDGET,
) -> Enclosure:
    """
    Central part: 1/pi * int_{eps1}^{pi-eps2} (f(x+y) - f(x-y)) / (2 tan(y/2)) dy
    """
    integrand = central_integrand(f, x)
    try:
        body = integrate_adaptive(integrand, spec.eps1, PI - spec.eps2, tol=tol, budget=budget, order=spec.order)
    except BudgetExhausted as err:
        raise BudgetExhausted(str(err), enclosure=err.enclosure.scaled(INV_PI)) from err
    return dataclasses.replace(body.scaled(INV_PI), scheme='pv-central')


def _combine(near: Enclosure, central: Enclosure, far: Enclosure) -> Enclosure:
    return Enclosure.build(
        near.main + central.main + far.main,
        near.error_term + central.error_term + far.error_term,
        cells=near.cells + central.cells + far.cells,
        scheme='hilbert-split',
        parts=(('near', near), ('central', central), ('far', far)),
    )


def hilbert_transform(
    f: JetFunction,
    x: Interval | float,
    spec: SplitSpec | None = None,
    tol: float = DEFAULT_HILBERT_TOL,
    budget: int = DEFAULT_BUDGET,
) -> Enclosure:
    """
    Enclosure of H f(x) as near + central + far part.
    The width of the near and far part is fixed by the split, tol only drives the central part.

    >>> from capverify.taylor_ad import jet_sin
    >>> e = hilbert_transform(jet_sin, 0.5, tol=1e-8)
    >>> e.value.contains(0.8775825618903728)
    True
    """
    if spec is None:
        spec = SplitSpec()
    if not tol > 0:
        raise ValueError(f'Tolerance must be > 0, got {tol}')
    near = pv_near(f, x, spec)
    far = pv_far(f, x, spec)
    try:
        central = pv_central(f, x, spec, tol=tol, budget=budget)
    except BudgetExhausted as err:
        enclosure = _combine(near, err.enclosure, far)
        raise BudgetExhausted(str(err), enclosure=enclosure) from err
    enclosure = _combine(near, central, far)
    logger.debug(f'H f({x}) in {enclosure.value}: near {near.value}, central {central.value}, far {far.value}')
    return enclosure
