"""
Radial profiles f(rho) of an annular vortex patch: 1 on the inner disc, 0 outside, and a
polynomial bridge in between that matches values and derivatives 1..4 at both seams:

    f = 1 - S(s),   S(s) = s^5 (126 - 420 s + 540 s^2 - 315 s^3 + 70 s^4),   s = (rho - a_inner) / width

S is the degree 9 smoothstep with S'(s) = 630 s^4 (1 - s)^4.
"""

import dataclasses
import logging

from capverify.interval_core import ONE, ZERO, Interval
from capverify.quad_rigor import JetPiece, PiecewiseJetFunction, value_enclosure
from capverify.taylor_ad import JetFunction, TaylorJet, evaluate_jet


logger = logging.getLogger(__name__)

# Pieces of f and f_rho reach this far beyond the outer radius:
PROFILE_REACH = 10.0
SEAM_ORDER = 4

SMOOTHSTEP = (126, -420, 540, -315, 70)


@dataclasses.dataclass(frozen=True)
class AnnularProfile:
    """
    >>> profile = build_profile()
    >>> value_enclosure(profile.f, 0.5), value_enclosure(profile.f, 1.2)
    (Interval(lo=1.0, hi=1.0), Interval(lo=0.0, hi=0.0))
    """

    a_inner: Interval
    a_outer: Interval
    f: PiecewiseJetFunction
    f_rho: PiecewiseJetFunction
    flat: bool = False

    @property
    def band(self) -> Interval:
        """Where f_rho lives."""
        return Interval(self.a_inner.lo, self.a_outer.hi)

    @property
    def band_width(self) -> Interval:
        return self.a_outer - self.a_inner

    def band_f_rho(self, rho: TaylorJet) -> TaylorJet:
        """The bridge formula of f_rho, usable with nested jets."""
        if self.flat:
            return rho * 0
        return _slope(rho, self.a_inner, self.band_width)

    def f_rho_range(self, rho: Interval) -> Interval:
        if self.flat:
            return ZERO
        return value_enclosure(self.f_rho, rho)


def _slope(rho: TaylorJet, a_inner: Interval, width: Interval) -> TaylorJet:
    s = (rho - a_inner) / width
    t = s * (1 - s)
    t2 = t * t
    return t2 * t2 * (-630) / width


def _bridge(a_inner: Interval, width: Interval) -> tuple[JetFunction, JetFunction]:
    def f(rho: TaylorJet) -> TaylorJet:
        s = (rho - a_inner) / width
        poly = s * 0 + SMOOTHSTEP[-1]
        for coefficient in reversed(SMOOTHSTEP[:-1]):
            poly = poly * s + coefficient
        s2 = s * s
        return 1 - s2 * s2 * s * poly

    def f_rho(rho: TaylorJet) -> TaylorJet:
        return _slope(rho, a_inner, width)

    return f, f_rho


def build_profile(a_inner: Interval | float = 0.95, a_outer: Interval | float = 1.0) -> AnnularProfile:
    a_inner = Interval.point(a_inner)
    a_outer = Interval.point(a_outer)
    if not (a_inner.certainly_positive() and a_inner.certainly_lt(a_outer)):
        raise ValueError(f'Need 0 < a_inner < a_outer, got {a_inner} and {a_outer}')
    f_band, f_rho_band = _bridge(a_inner, a_outer - a_inner)

    def inner_plateau(rho: TaylorJet) -> Interval:
        return ONE

    def outer_plateau(rho: TaylorJet) -> Interval:
        return ZERO

    seams = [a_inner, a_outer]
    hi = a_outer.hi + PROFILE_REACH
    return AnnularProfile(
        a_inner=a_inner,
        a_outer=a_outer,
        f=PiecewiseJetFunction.from_seams([inner_plateau, f_band, outer_plateau], seams=seams, lo=0, hi=hi),
        f_rho=PiecewiseJetFunction.from_seams([outer_plateau, f_rho_band, outer_plateau], seams=seams, lo=0, hi=hi),
    )


def flat_profile(a_inner: Interval | float = 0.95, a_outer: Interval | float = 1.0) -> AnnularProfile:
    """f_rho == 0 everywhere, all kernels vanish."""
    profile = build_profile(a_inner, a_outer)
    zero = PiecewiseJetFunction((JetPiece(profile.f_rho.support, lambda rho: ZERO),))
    return dataclasses.replace(profile, f_rho=zero, flat=True)


def seam_continuity(profile: AnnularProfile, order: int = SEAM_ORDER) -> dict[str, bool]:
    """
    Compare the Taylor coefficients 0..order of neighboring formulas at both seams.

    >>> seam_continuity(build_profile())
    {'inner': True, 'outer': True}
    """
    result = {}
    for name, seam, left, right in (
        ('inner', profile.a_inner, profile.f.pieces[0], profile.f.pieces[1]),
        ('outer', profile.a_outer, profile.f.pieces[1], profile.f.pieces[2]),
    ):
        left_jet = evaluate_jet(left.func, seam, order)
        right_jet = evaluate_jet(right.func, seam, order)
        result[name] = all(
            (a - b).contains(0) for a, b in zip(left_jet.coeffs, right_jet.coeffs, strict=True)
        )
        logger.debug(f'Seam {name} at {seam}: continuous={result[name]}')
    return result
