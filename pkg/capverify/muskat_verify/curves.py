"""
Initial curves z(alpha) = (z1(alpha), z2(alpha)) of the Muskat problems.

All formulas are given for alpha >= 0: z1 and z2 are odd, their derivatives even.
z1 is smooth everywhere, z2 is a piecewise function with thick (pi based) seams.
"""

import dataclasses
import functools
import logging
from typing import Literal, NamedTuple

from capverify.interval_core import PI, ZERO, Interval
from capverify.quad_rigor import JetPiece, PiecewiseJetFunction, value_enclosure
from capverify.taylor_ad import JetFunction, TaylorJet, as_jet, jet_cos, jet_exp, jet_sin, jet_sin_cos


logger = logging.getLogger(__name__)

B_DAMPING = Interval.from_decimal('1e-4')
THIRD_PI = PI / 3
HALF_PI = PI / 2
TWO_THIRDS_PI = PI * 2 / 3

# the last piece reaches this far beyond the support radius:
SUPPORT_MARGIN = 2.0

H2_RANGE = Interval(0.25, 1.25)

CurveComponent = Literal['z1', 'z2', 'dz1', 'dz2']


class CurvePoint(NamedTuple):
    z1: TaylorJet
    z2: TaylorJet
    dz1: TaylorJet
    dz2: TaylorJet


@dataclasses.dataclass(frozen=True)
class CurvePiece:
    domain: Interval
    z2: JetFunction
    dz2: JetFunction


@dataclasses.dataclass(frozen=True)
class CurveFamily:
    """
    >>> curve = curve_theorem1()
    >>> curve.evaluate('z2', PI / 6).contains(1 / 3)
    True
    >>> curve.evaluate('z2', 3.0)
    Interval(lo=0.0, hi=0.0)
    """

    name: str
    z1: JetFunction
    dz1: JetFunction
    pieces: tuple[CurvePiece, ...]
    B: Interval
    support_radius: Interval
    h2: Interval | None = None

    @functools.cached_property
    def z2(self) -> PiecewiseJetFunction:
        return PiecewiseJetFunction(tuple(JetPiece(piece.domain, piece.z2) for piece in self.pieces))

    @functools.cached_property
    def dz2(self) -> PiecewiseJetFunction:
        return PiecewiseJetFunction(tuple(JetPiece(piece.domain, piece.dz2) for piece in self.pieces))

    @property
    def breakpoints(self) -> tuple[Interval, ...]:
        return self.z2.breakpoints

    @property
    def reach(self) -> float:
        return self.pieces[-1].domain.hi

    def component(self, name: CurveComponent) -> JetFunction:
        return {'z1': self.z1, 'z2': self.z2, 'dz1': self.dz1, 'dz2': self.dz2}[name]

    def at(self, x: TaylorJet) -> CurvePoint:
        """All four components as jets at a base inside [0, reach]."""
        return CurvePoint(
            z1=as_jet(self.z1(x), like=x),
            z2=self.z2(x),
            dz1=as_jet(self.dz1(x), like=x),
            dz2=self.dz2(x),
        )

    def smooth_at(self, x: TaylorJet) -> CurvePoint:
        """
        Components with the formulas of the first piece, for curves that are smooth on their
        whole support. Works with nested jets, which the piecewise lookup does not.
        """
        if self.breakpoints and self.breakpoints[0].lo < self.support_radius.lo:
            raise ValueError(f'Curve {self.name!r} has seams inside its support')
        first = self.pieces[0]
        return CurvePoint(
            z1=as_jet(self.z1(x), like=x),
            z2=as_jet(first.z2(x), like=x),
            dz1=as_jet(self.dz1(x), like=x),
            dz2=as_jet(first.dz2(x), like=x),
        )

    def evaluate(self, name: CurveComponent, alpha: Interval | float) -> Interval:
        """Range enclosure of one component, negative arguments by symmetry."""
        alpha = Interval.point(alpha)
        func = self.component(name)
        if alpha.lo >= 0:
            return value_enclosure(func, alpha)
        if alpha.hi <= 0:
            value = value_enclosure(func, -alpha)
            return -value if name in ('z1', 'z2') else value
        return self.evaluate(name, Interval(alpha.lo, 0.0)).hull(self.evaluate(name, Interval(0.0, alpha.hi)))

    def dz2_at_zero(self) -> Interval:
        return self.evaluate('dz2', 0)

    def magnitude_on_support(self, name: CurveComponent, pieces: int = 32) -> Interval:
        """Enclosure of max |component| over [0, support_radius]."""
        bound = 0.0
        for part in Interval(0.0, self.support_radius.hi).subdivide(pieces):
            bound = max(bound, self.evaluate(name, part).magnitude())
        return Interval(0.0, bound)


# ---------------------------------------------------------------------------------------------
# z1(alpha) = alpha - sin(alpha) exp(-B alpha^2)


def _damped_z1(B: Interval):
    def z1(a: TaylorJet) -> TaylorJet:
        return a - jet_sin(a) * jet_exp(a * a * -B)

    def dz1(a: TaylorJet) -> TaylorJet:
        damping = jet_exp(a * a * -B)
        s, c = jet_sin_cos(a)
        return 1 - c * damping + a * s * damping * (B * 2)

    return z1, dz1


def _pieces(formulas: list[tuple[JetFunction, JetFunction]], seams: list[Interval], reach: float):
    starts = [0.0] + [seam.hi for seam in seams]
    ends = [seam.lo for seam in seams] + [reach]
    return tuple(
        CurvePiece(Interval(start, end), z2, dz2) for start, end, (z2, dz2) in zip(starts, ends, formulas)
    )


def _zero(a: TaylorJet) -> Interval:
    return ZERO


def curve_theorem1(B: Interval = B_DAMPING) -> CurveFamily:
    """
    z2 = sin(3a)/3 on [0, pi/3], pi/3 - a on [pi/3, pi/2], a - 2pi/3 on [pi/2, 2pi/3], 0 beyond.
    """
    z1, dz1 = _damped_z1(B)

    def arc(a: TaylorJet) -> TaylorJet:
        return jet_sin(a * 3) / 3

    def arc_slope(a: TaylorJet) -> TaylorJet:
        return jet_cos(a * 3)

    def falling(a: TaylorJet) -> TaylorJet:
        return THIRD_PI - a

    def rising(a: TaylorJet) -> TaylorJet:
        return a - TWO_THIRDS_PI

    formulas = [
        (arc, arc_slope),
        (falling, lambda a: Interval(-1.0, -1.0)),
        (rising, lambda a: Interval(1.0, 1.0)),
        (_zero, _zero),
    ]
    seams = [THIRD_PI, HALF_PI, TWO_THIRDS_PI]
    support = TWO_THIRDS_PI
    return CurveFamily(
        name='theorem1',
        z1=z1,
        dz1=dz1,
        pieces=_pieces(formulas, seams, reach=support.hi + SUPPORT_MARGIN),
        B=B,
        support_radius=support,
    )


def curve_bifurcation(h2: Interval | float, B: Interval = B_DAMPING) -> CurveFamily:
    """
    z2 = h2 (3/pi) (sin(3a)/3 - sin(a)/2.5 (exp(-(a+2)^2) + exp(-(a-2)^2))) for |a| <= pi.

    >>> curve = curve_bifurcation(0.5)
    >>> curve.evaluate('z2', 0), curve.dz2_at_zero().certainly_positive()
    (Interval(lo=0.0, hi=0.0), True)
    """
    h2 = Interval.point(h2)
    if not H2_RANGE.contains(h2):
        raise ValueError(f'h2 must be inside {H2_RANGE}, got {h2}')
    z1, dz1 = _damped_z1(B)
    scale = h2 * 3 / PI

    def bumps(a: TaylorJet) -> tuple[TaylorJet, TaylorJet]:
        left = jet_exp(-((a + 2) * (a + 2)))
        right = jet_exp(-((a - 2) * (a - 2)))
        value = left + right
        slope = left * (a + 2) * -2 - right * (a - 2) * 2
        return value, slope

    def z2(a: TaylorJet) -> TaylorJet:
        value, _ = bumps(a)
        return (jet_sin(a * 3) / 3 - jet_sin(a) * value / 2.5) * scale

    def dz2(a: TaylorJet) -> TaylorJet:
        value, slope = bumps(a)
        s, c = jet_sin_cos(a)
        return (jet_cos(a * 3) - (c * value + s * slope) / 2.5) * scale

    support = PI
    return CurveFamily(
        name='bifurcation',
        z1=z1,
        dz1=dz1,
        pieces=_pieces([(z2, dz2), (_zero, _zero)], [support], reach=support.hi + SUPPORT_MARGIN),
        B=B,
        support_radius=support,
        h2=h2,
    )


def curve_flat() -> CurveFamily:
    """z = (alpha, 0): both Muskat integrands vanish identically."""
    return CurveFamily(
        name='flat',
        z1=lambda a: a,
        dz1=lambda a: Interval(1.0, 1.0),
        pieces=(CurvePiece(Interval(0.0, 1.0 + SUPPORT_MARGIN), _zero, _zero),),
        B=ZERO,
        support_radius=Interval(1.0, 1.0),
    )


def cutoff_jump(curve: CurveFamily) -> Interval:
    """Enclosure of z2 just inside the support end: the jump of z2 at the cutoff."""
    first = curve.pieces[0]
    return value_enclosure(first.z2, curve.support_radius)
