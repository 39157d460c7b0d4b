"""
Kernels of the linearized V-state operator:

    I(rho)          = -1/(2 pi) int f_rho(r) J_1(rho / r) dr
    T_m(rho, r)     =  1/(2 pi) f_rho(r) (r / rho) J_m(rho / r)
    J_m(q)          =  int_{-pi}^{pi} cos(m x) / sqrt(1 + q^2 - 2 q cos x) dx

J_m(q) = 2 pi (1/2)_m / m! q^m 2F1(1/2, m + 1/2; m + 1; q^2) for q < 1 and J_m(q) = J_m(1/q) / q
for q > 1. So J_m > 0, increasing on (0, 1) and decreasing on (1, oo), with a logarithmic
singularity at q = 1: the range over an interval q that excludes 1 is the hull of the endpoint values.

Near the diagonal, with 1 + q^2 - 2 q cos x = (1 - q)^2 + 4 q sin(x/2)^2 and sin(x/2) >= x/pi:

    J_m(q) <= (pi / sqrt(q)) asinh(2 sqrt(q) / |1 - q|) <= (pi / sqrt(q)) (log(1 + 4 sqrt(q)) + log(r) - log|r - rho|)
"""

import dataclasses
import functools
import logging
import math

from capverify.errors import BudgetExhausted, DomainViolation
from capverify.interval_core import ONE, PI, TWO_PI, ZERO, Interval, log, sqrt
from capverify.quad_rigor import Enclosure, integrate_2d, integrate_adaptive
from capverify.quad_rigor.adaptive import DEFAULT_BUDGET
from capverify.spectral_encloser.profile import AnnularProfile
from capverify.taylor_ad import JetFunction, TaylorJet, jet_cos, jet_sin, jet_sqrt


logger = logging.getLogger(__name__)

SYMMETRY_MODE = 3
MULTIPLIER_MODE = 1
DEFAULT_ANGULAR_TOL = 1e-10
DEFAULT_KERNEL_TOL = 1e-6
DEFAULT_CELL_TOL = 1e-8  # angular integrals of the Galerkin entries
FIRST_WINDOW = 1e-2
MAX_WINDOW_HALVINGS = 40


def radicand(q: Interval | TaylorJet, x: TaylorJet) -> TaylorJet:
    """1 + q^2 - 2 q cos x written as (1 - q)^2 + 4 q sin(x/2)^2: no cancellation, positive off q = 1."""
    s = jet_sin(x / 2)
    gap = 1 - q
    return gap * gap + s * s * (q * 4)


def angular_integrand(m: int, q: Interval) -> JetFunction:
    def func(x: TaylorJet) -> TaylorJet:
        return jet_cos(x * m) / jet_sqrt(radicand(q, x))

    return func


@functools.lru_cache(maxsize=4096)
def _angular_point(m: int, q: float, tol: float, budget: int) -> Interval:
    # even integrand: twice the integral over [0, pi]
    enclosure = integrate_adaptive(angular_integrand(m, Interval.point(q)), 0, PI, tol / 2, budget)
    return enclosure.value * 2


def angular_integral(
    m: int, q: Interval | float, tol: float = DEFAULT_ANGULAR_TOL, budget: int = DEFAULT_BUDGET
) -> Interval:
    """
    >>> abs(angular_integral(1, 0.5).mid - 1.7463) < 1e-3
    True
    """
    if m < 0:
        raise ValueError(f'Mode must be >= 0, got {m}')
    q = Interval.point(q)
    if not q.certainly_positive():
        raise DomainViolation(f'q={q} must be positive')
    if q.contains(1):
        raise DomainViolation(f'q={q} touches the logarithmic singularity at 1')
    lower = _angular_point(m, q.lo, tol, budget)
    if q.is_thin:
        return lower
    return lower.hull(_angular_point(m, q.hi, tol, budget))


def _log_integral(h: float) -> Interval:
    """int_0^h -log(t) dt = h (1 - log h)"""
    if h <= 0:
        return ZERO
    h = Interval.point(h)
    return h * (ONE - log(h))


def _log_square_integral(h: float) -> Interval:
    """int_0^h log(t)^2 dt = h (log(h)^2 - 2 log(h) + 2)"""
    if h <= 0:
        return ZERO
    h = Interval.point(h)
    L = log(h)
    return h * (L * L - L * 2 + 2)


@dataclasses.dataclass(frozen=True)
class LogBound:
    """|J_m(rho / r)| <= constant + slope * (-log|r - rho|) for rho, r in the given ranges."""

    constant: Interval
    slope: Interval


def log_bound(rho: Interval, window: Interval) -> LogBound:
    if not (rho.certainly_positive() and window.certainly_positive()):
        raise DomainViolation(f'Radii must be positive: rho={rho}, window={window}')
    if rho.hi > 2 * window.lo:
        # |1 - q| <= 1 is needed below
        raise DomainViolation(f'rho={rho} is too far from {window} for the log bound')
    q = rho / window
    root_lo = sqrt(Interval.point(q.lo))
    root_hi = sqrt(Interval.point(q.hi))
    slope = PI / root_lo
    constant = slope * (log(ONE + root_hi * 4) + log(Interval.point(window.hi)))
    return LogBound(Interval.point(constant.hi), Interval.point(slope.hi))


def window_integral_bound(rho: Interval, window: Interval) -> Interval:
    """
    Upper bound of int_window J_m(rho / r) dr for any rho in the given range.
    The log integral is largest when rho sits in the middle of the window.
    """
    bound = log_bound(rho, window)
    width = window.width_up()
    log_part = _log_integral(width / 2) * 2
    if log_part.hi < 0:
        log_part = ZERO
    total = bound.constant * width + bound.slope * log_part
    return Interval(0.0, total.hi)


def window_square_bound(rho: Interval, window: Interval) -> Interval:
    """Upper bound of int_window J_m(rho / r)^2 dr, same setting."""
    bound = log_bound(rho, window)
    width = window.width_up()
    constant_part = bound.constant * bound.constant * width * 2
    total = constant_part + bound.slope * bound.slope * _log_square_integral(width / 2) * 4
    return Interval(0.0, total.hi)


def kernel_T3(
    rho: Interval | float,
    rho_p: Interval | float,
    profile: AnnularProfile,
    m: int = SYMMETRY_MODE,
    tol: float = DEFAULT_ANGULAR_TOL,
    budget: int = DEFAULT_BUDGET,
) -> Interval:
    """
    Range of T_m over rho x rho_p. J_m > 0 is unbounded where rho / rho_p touches 1: there the
    range is the half line on the side of the slope sign. Integrals over such cells use the log bound.

    >>> from capverify.spectral_encloser.profile import build_profile
    >>> kernel_T3(0.97, 1.5, build_profile())
    Interval(lo=0.0, hi=0.0)
    >>> kernel_T3(0.97, 0.97, build_profile())
    Interval(lo=-inf, hi=0.0)
    """
    rho = Interval.point(rho)
    rho_p = Interval.point(rho_p)
    slope = profile.f_rho_range(rho_p)
    if slope == ZERO:
        return ZERO
    q = rho / rho_p
    if q.contains(1):
        logger.debug(f'T_{m}({rho}, {rho_p}) touches the diagonal, slope {slope}')
        if slope.hi <= 0:
            return Interval(-math.inf, 0.0)
        if slope.lo >= 0:
            return Interval(0.0, math.inf)
        return Interval.entire()
    J = angular_integral(m, q, tol, budget)
    return slope * (rho_p / rho) * J / TWO_PI


def _radial_angular(profile: AnnularProfile, rho: Interval, m: int):
    """(r, x) -> f_rho(r) cos(m x) / sqrt((1 - q)^2 + 4 q sin(x/2)^2), q = rho / r"""

    def func(R: TaylorJet, X: TaylorJet) -> TaylorJet:
        q = rho / R
        return profile.band_f_rho(R) * jet_cos(X * m) / jet_sqrt(radicand(q, X))

    return func


def _window_for(rho: Interval, band: Interval, half_width: float) -> Interval | None:
    lo = max(band.lo, rho.lo - half_width)
    hi = min(band.hi, rho.hi + half_width)
    if lo >= hi:
        return None
    return Interval(lo, hi)


def kernel_I(
    rho: Interval | float,
    profile: AnnularProfile,
    tol: float = DEFAULT_KERNEL_TOL,
    budget: int = DEFAULT_BUDGET,
) -> Interval:
    """
    Two dimensional rigorous quadrature over (r, x) off a window around r = rho, the
    window itself by the log bound. The window shrinks until its share is below tol / 2.

    >>> from capverify.spectral_encloser.profile import flat_profile
    >>> kernel_I(0.97, flat_profile())
    Interval(lo=0.0, hi=0.0)
    """
    rho = Interval.point(rho)
    if not rho.certainly_positive():
        raise DomainViolation(f'rho={rho} must be positive')
    if profile.flat:
        return ZERO
    band = profile.band

    window = None
    window_part = ZERO
    half_width = FIRST_WINDOW
    for _ in range(MAX_WINDOW_HALVINGS):
        window = _window_for(rho, band, half_width)
        if window is None:
            break
        window_part = profile.f_rho_range(window) * window_integral_bound(rho, window)
        if window_part.width_up() <= tol / 2:
            break
        half_width /= 2
    else:
        logger.info(f'I({rho}): window {window} still contributes {window_part}')

    regions = []
    if window is None:
        regions.append(band)
    else:
        if window.lo > band.lo:
            regions.append(Interval(band.lo, window.lo))
        if window.hi < band.hi:
            regions.append(Interval(window.hi, band.hi))

    func = _radial_angular(profile, rho, MULTIPLIER_MODE)
    total = window_part
    region_tol = tol / (2 * max(len(regions), 1))
    exhausted = []
    for region in regions:
        box = (region.lo, region.hi, 0, PI)
        try:
            enclosure = integrate_2d(func, box, tol=region_tol, budget=budget)
        except BudgetExhausted as err:
            enclosure = err.enclosure
            exhausted.append(str(err))
        # even in x:
        total = total + enclosure.value * 2
    value = -total / TWO_PI
    if exhausted:
        raise BudgetExhausted('; '.join(exhausted), enclosure=Enclosure.build(value, scheme='kernel-I'))
    return value


def multiplier_range(cell: Interval, profile: AnnularProfile, pieces: int = 64) -> Interval:
    """
    Range of I over a whole radial cell: sum over sub cells r of the band of
    f_rho range * J_1 range * length, and the log bound where r touches the cell.
    """
    if profile.flat:
        return ZERO
    total = ZERO
    for part in profile.band.subdivide(pieces):
        slope = profile.f_rho_range(part)
        q = cell / part
        if q.contains(1) or part.intersect(cell) is not None:
            total = total + slope * window_integral_bound(cell, part)
        else:
            total = total + slope * angular_integral(MULTIPLIER_MODE, q, DEFAULT_CELL_TOL) * part.width()
    return -total / TWO_PI


def cell_kernel_integral(ci: Interval, cj: Interval, profile: AnnularProfile, m: int = SYMMETRY_MODE) -> Interval:
    """
    Enclosure of int_ci int_cj T_m(rho, r) dr drho. Touching cells use the log bound.
    """
    slope = profile.f_rho_range(cj)
    if slope == ZERO:
        return ZERO
    q = ci / cj
    if not q.contains(1) and ci.intersect(cj) is None:
        return kernel_T3(ci, cj, profile, m, DEFAULT_CELL_TOL) * ci.width() * cj.width()
    ratio = cj / ci
    inner = window_integral_bound(ci, cj)
    return slope * ratio * inner * ci.width() / TWO_PI


def cell_kernel_square(ci: Interval, cj: Interval, profile: AnnularProfile, m: int = SYMMETRY_MODE) -> Interval:
    """Upper bound of int_ci int_cj |T_m - mean|^2, never more than int int T_m^2."""
    slope = profile.f_rho_range(cj)
    if slope == ZERO:
        return ZERO
    q = ci / cj
    if not q.contains(1) and ci.intersect(cj) is None:
        spread = kernel_T3(ci, cj, profile, m, DEFAULT_CELL_TOL).width_up()
        return Interval(0.0, (Interval.point(spread) * spread * ci.width() * cj.width()).hi)
    factor = Interval.point(slope.magnitude()) * (cj / ci).magnitude() / TWO_PI
    square = factor * factor * window_square_bound(ci, cj) * ci.width()
    return Interval(0.0, square.hi)
