"""
The double integrals of the confined inhomogeneous problem over gamma in [0, pi], y in [0, oo):

    I2  = 4 dz2(0) K  int int F(gamma, y)
    DI2 = 4 dz2(0)    int int F(gamma, y) sinh(pi y) / (sinh(pi y) + K sinh(2 h2 y))

    F = dz2(g) cos(z1(g) y) cosh(y z2(g)) cosh(a y) (2y cosh(a y) cosh(pi y/2) - 2 sinh(h2 y)/tan(h2))
        / ((sinh(pi y) + K sinh(2 h2 y)) cosh(pi y/2)),            a = pi/2 - h2

Both y factors vanish at y = 0. With sinh(t) = t sinhc(t) they are divided out:

    sinh(pi y) + K sinh(2 h2 y) = y D(y),   D = pi sinhc(pi y) + 2 K h2 sinhc(2 h2 y)

and D > 0 as soon as K > -1 and 2 h2 < pi, because sinhc is increasing on [0, oo).
"""

import dataclasses
import logging

from capverify.errors import BudgetExhausted, PositivityCertificateFailed
from capverify.interval_core import ONE, PI, ZERO, Interval, exp, tan
from capverify.muskat_verify.curves import HALF_PI, CurveFamily, curve_bifurcation
from capverify.quad_rigor import BivariateJetFunction, Enclosure, integrate_2d
from capverify.quad_rigor.adaptive import DEFAULT_BUDGET
from capverify.quad_rigor.two_d import range_enclosure_2d
from capverify.taylor_ad import TaylorJet, jet_cos, jet_cosh, jet_sinhc


logger = logging.getLogger(__name__)

K_RANGE = Interval(-1.0, 1.0)
FIRST_CUTOFF = 4.0
CUTOFF_STEP = 4.0
MAX_CUTOFF = 400.0
DEFAULT_KERNEL_TOL = 1e-3


@dataclasses.dataclass(frozen=True)
class KernelSetup:
    curve: CurveFamily
    h2: Interval
    K: Interval

    @property
    def a(self) -> Interval:
        return HALF_PI - self.h2

    @property
    def tan_h2(self) -> Interval:
        return tan(self.h2)


def check_positivity(h2: Interval, K: Interval) -> None:
    """
    Certify D(y) > 0 for all y >= 0 on the whole parameter cell.
    """
    if not (K.lo > K_RANGE.lo and K.hi < K_RANGE.hi):
        raise PositivityCertificateFailed(f'K={K} is not inside (-1, 1)')
    if not (h2 * 2).certainly_lt(PI):
        raise PositivityCertificateFailed(f'2 h2 = {h2 * 2} is not below pi')
    if not (PI + K * h2 * 2).certainly_positive():
        raise PositivityCertificateFailed(f'pi + 2 K h2 is not positive for h2={h2}, K={K}')


def denominator_factor(y: TaylorJet, h2: Interval, K: Interval) -> TaylorJet:
    """D(y) = (sinh(pi y) + K sinh(2 h2 y)) / y"""
    return jet_sinhc(y * PI) * PI + jet_sinhc(y * (h2 * 2)) * (K * h2 * 2)


def kernel(setup: KernelSetup, squared: bool = False) -> BivariateJetFunction:
    """F(gamma, y) for the I2 integral, with squared=True the DI2 integrand."""
    curve = setup.curve
    h2 = setup.h2
    K = setup.K
    a = setup.a
    sinhc_factor = h2 * 2 / setup.tan_h2

    def F(X: TaylorJet, Y: TaylorJet) -> TaylorJet:
        p = curve.smooth_at(X)
        cosh_a = jet_cosh(Y * a)
        cosh_half = jet_cosh(Y * HALF_PI)
        bracket = cosh_a * cosh_half * 2 - jet_sinhc(Y * h2) * sinhc_factor
        D = denominator_factor(Y, h2, K)
        y_part = bracket * cosh_a / (D * cosh_half)
        if squared:
            y_part = y_part * jet_sinhc(Y * PI) * PI / D
        return p.dz2 * jet_cos(p.z1 * Y) * jet_cosh(p.z2 * Y) * y_part

    return F


def tail_bound(setup: KernelSetup, cutoff: float, squared: bool = False) -> Interval:
    """
    Symmetric enclosure of int_0^pi int_cutoff^oo F for cutoff >= 1.

    With kappa = 1 - max(0, -K), Dz >= |dz2|, Zm >= |z2| on [0, pi] and delta = 2 h2 - Zm > 0:

        |F| <= C y exp(-delta y),   C = 4 Dz (2 + 1/|tan h2|) / (kappa (1 - exp(-2 pi cutoff)))

    DI2 carries another factor 1/kappa.
    """
    if cutoff < 1:
        raise ValueError(f'Tail cutoff must be >= 1, got {cutoff}')
    curve = setup.curve
    dz_max = Interval.point(curve.magnitude_on_support('dz2').hi)
    z_max = curve.magnitude_on_support('z2').hi
    delta = setup.h2 * 2 - z_max
    if not delta.certainly_positive():
        raise PositivityCertificateFailed(f'No exponential decay: 2 h2 - |z2| = {delta}')
    delta = Interval.point(delta.lo)
    kappa = ONE - max(0.0, -setup.K.lo)
    if not kappa.certainly_positive():
        raise PositivityCertificateFailed(f'K={setup.K} reaches -1')
    kappa = Interval.point(kappa.lo)
    tan_min = Interval.point(setup.tan_h2.mignitude())
    Y = Interval.point(cutoff)

    C = dz_max * (ONE / tan_min + 2) * 4 / (kappa * (ONE - exp(Y * PI * -2)))
    if squared:
        C = C / kappa
    bound = PI * C * exp(-(delta * Y)) * (Y / delta + ONE / (delta * delta))
    return Interval(-bound.hi, bound.hi)


def choose_cutoff(setup: KernelSetup, tail_tol: float, squared: bool = False) -> tuple[float, Interval]:
    cutoff = FIRST_CUTOFF
    while True:
        tail = tail_bound(setup, cutoff, squared)
        if tail.width_up() <= tail_tol:
            return cutoff, tail
        if cutoff >= MAX_CUTOFF:
            raise PositivityCertificateFailed(f'Tail {tail} stays above {tail_tol} up to y={cutoff}')
        cutoff += CUTOFF_STEP


def _prefactor(curve: CurveFamily, K: Interval, squared: bool) -> Interval:
    factor = curve.dz2_at_zero() * 4
    if not squared:
        factor = factor * K
    return factor


def double_integral(
    h2: Interval | float,
    K: Interval | float,
    squared: bool,
    tol: float = DEFAULT_KERNEL_TOL,
    budget: int = DEFAULT_BUDGET,
) -> Enclosure:
    h2 = Interval.point(h2)
    K = Interval.point(K)
    check_positivity(h2, K)
    curve = curve_bifurcation(h2)
    setup = KernelSetup(curve, h2, K)
    scheme = 'di2' if squared else 'i2'

    scale = _prefactor(curve, K, squared)
    magnitude = scale.magnitude()
    if magnitude == 0:
        return Enclosure.exact(ZERO, scheme=scheme)
    inner_tol = tol / magnitude

    cutoff, tail = choose_cutoff(setup, inner_tol / 2, squared)
    tail_part = Enclosure.build(ZERO, tail, scheme='y-tail')
    logger.debug(f'{scheme}(h2={h2}, K={K}): y cut at {cutoff}, tail {tail}')

    F = kernel(setup, squared)
    box = (ZERO, curve.support_radius, ZERO, Interval.point(cutoff))
    try:
        body = integrate_2d(F, box, tol=inner_tol / 2, budget=budget)
        exhausted = None
    except BudgetExhausted as err:
        body = err.enclosure
        exhausted = err

    enclosure = Enclosure.build(
        body.main * scale,
        (body.error_term + tail) * scale,
        cells=body.cells,
        scheme=scheme,
        parts=(('body', body.scaled(scale)), ('tail', tail_part.scaled(scale))),
    )
    if exhausted is not None:
        raise BudgetExhausted(str(exhausted), enclosure=enclosure) from exhausted
    return enclosure


def i2(
    h2: Interval | float, K: Interval | float, tol: float = DEFAULT_KERNEL_TOL, budget: int = DEFAULT_BUDGET
) -> Enclosure:
    """
    >>> i2(0.7, 0).value
    Interval(lo=0.0, hi=0.0)
    """
    return double_integral(h2, K, squared=False, tol=tol, budget=budget)


def di2(
    h2: Interval | float, K: Interval | float, tol: float = DEFAULT_KERNEL_TOL, budget: int = DEFAULT_BUDGET
) -> Enclosure:
    return double_integral(h2, K, squared=True, tol=tol, budget=budget)


def coarse_sign_enclosure(h2: Interval | float, K: Interval | float, squared: bool = True) -> Interval:
    """
    Range of the kernel over the whole truncated box times its area plus the tail.
    Decides the sign only where the integrand has one.
    """
    h2 = Interval.point(h2)
    K = Interval.point(K)
    check_positivity(h2, K)
    curve = curve_bifurcation(h2)
    setup = KernelSetup(curve, h2, K)
    cutoff = FIRST_CUTOFF
    tail = tail_bound(setup, cutoff, squared)
    box_x = Interval(0.0, curve.support_radius.hi)
    box_y = Interval(0.0, cutoff)
    value = range_enclosure_2d(kernel(setup, squared), box_x, box_y)
    area = box_x.width() * box_y.width()
    return (value * area + tail) * _prefactor(curve, K, squared)

