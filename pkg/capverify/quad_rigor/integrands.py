"""
Integrands are jet functions: they map a TaylorJet to a TaylorJet (or a constant).
"""

import dataclasses
import logging
from collections.abc import Callable

from capverify.errors import DomainViolation, NonOrderedBounds
from capverify.interval_core import ZERO, Interval
from capverify.taylor_ad import JetFunction, TaylorJet, as_jet, evaluate_jet


logger = logging.getLogger(__name__)

# f(X, Y) for nested seeds, see capverify.taylor_ad.jet.bivariate_seeds():
BivariateJetFunction = Callable[[TaylorJet, TaylorJet], 'TaylorJet | Interval | int | float']


def value_enclosure(f: JetFunction, x: Interval | float) -> Interval:
    """
    Range enclosure of f over x.

    >>> value_enclosure(lambda x: x * x, Interval(1, 2))
    Interval(lo=1.0, hi=4.0)
    """
    return evaluate_jet(f, Interval.point(x), 0).coeffs[0]


@dataclasses.dataclass(frozen=True)
class JetPiece:
    """
    `func` is the integrand on `domain`. Between the domains of two neighboring pieces lies the
    (thick) seam, where both formulas are valid one sided.
    """

    domain: Interval
    func: JetFunction


@dataclasses.dataclass(frozen=True)
class PiecewiseJetFunction:
    """
    >>> f = PiecewiseJetFunction.from_seams([lambda x: x, lambda x: 1 - x], seams=[0.5], lo=0, hi=1)
    >>> f.breakpoints
    (Interval(lo=0.5, hi=0.5),)
    >>> value_enclosure(f, 0.5)
    Interval(lo=0.5, hi=0.5)
    >>> value_enclosure(f, Interval(0.25, 0.75))
    Interval(lo=0.25, hi=0.5)
    """

    pieces: tuple[JetPiece, ...]

    def __post_init__(self):
        if not self.pieces:
            raise ValueError('Need at least one piece')
        for left, right in zip(self.pieces, self.pieces[1:]):
            if left.domain.hi > right.domain.lo:
                raise ValueError(f'Overlapping pieces: {left.domain} and {right.domain}')

    @classmethod
    def from_seams(
        cls,
        funcs: list[JetFunction],
        seams: list[Interval | float],
        lo: Interval | float,
        hi: Interval | float,
    ) -> 'PiecewiseJetFunction':
        if len(funcs) != len(seams) + 1:
            raise ValueError(f'{len(funcs)} pieces need {len(funcs) - 1} seams, got {len(seams)}')
        lo = Interval.point(lo)
        hi = Interval.point(hi)
        seams = [Interval.point(seam) for seam in seams]
        starts = [lo.lo] + [seam.hi for seam in seams]
        ends = [seam.lo for seam in seams] + [hi.hi]
        return cls(tuple(JetPiece(Interval(a, b), func) for a, b, func in zip(starts, ends, funcs)))

    @property
    def breakpoints(self) -> tuple[Interval, ...]:
        return tuple(Interval(left.domain.hi, right.domain.lo) for left, right in zip(self.pieces, self.pieces[1:]))

    @property
    def support(self) -> Interval:
        return Interval(self.pieces[0].domain.lo, self.pieces[-1].domain.hi)

    def _reach(self, index: int) -> Interval:
        """Closed region where piece `index` may be the integrand."""
        lo = self.pieces[index - 1].domain.hi if index > 0 else self.pieces[index].domain.lo
        hi = self.pieces[index + 1].domain.lo if index + 1 < len(self.pieces) else self.pieces[index].domain.hi
        return Interval(lo, hi)

    def piece_for(self, base: Interval) -> JetPiece | None:
        """The single piece valid on the whole base; a thin base on a seam gets the right hand piece."""
        for piece in reversed(self.pieces):
            if piece.domain.contains(base):
                return piece
        return None

    def __call__(self, x: TaylorJet) -> TaylorJet:
        base = x.base
        if not self.support.contains(base):
            raise DomainViolation(f'{base} is outside of the piecewise support {self.support}')
        if piece := self.piece_for(base):
            return as_jet(piece.func(x), like=x)
        if x.order > 0:
            raise DomainViolation(f'Jet base {base} straddles a seam of a piecewise function')
        value = None
        for index, piece in enumerate(self.pieces):
            part = base.intersect(self._reach(index))
            if part is None:
                continue
            piece_value = evaluate_jet(piece.func, part, 0).coeffs[0]
            value = piece_value if value is None else value.hull(piece_value)
        return TaylorJet(base, (value,))


def split_thick_bounds(f: JetFunction, a: Interval, b: Interval) -> tuple[float, float, Interval]:
    """
    Split an integral with interval bounds into the core [a.hi, b.lo] and two sliver terms,
    each enclosed by range times length.
    """
    if a.lo > b.hi:
        raise NonOrderedBounds(f'Lower bound {a} is above the upper bound {b}')
    if a.hi > b.lo:
        # the bounds overlap: nothing but slivers
        whole = Interval(a.lo, b.hi)
        span = Interval(-whole.width_up(), whole.width_up())
        return b.lo, b.lo, value_enclosure(f, whole) * span
    error = ZERO
    if not a.is_thin:
        error = error + value_enclosure(f, a) * Interval(0.0, a.width_up())
    if not b.is_thin:
        error = error + value_enclosure(f, b) * Interval(0.0, b.width_up())
    return a.hi, b.lo, error
