"""
Removable singularities of num(y) / den(y) at the expansion point e.

Both jets start with `drop` vanishing coefficients, so the quotient is the quotient of the
shifted jets. Over a window around e the shifted functions are

    N(y) = sum_{k=drop}^{N-1} n_k (y-e)^(k-drop) + rho(y) (y-e)^(N-drop),   rho(y) in n_N(window)

and D(y) likewise, which gives value and integral enclosures of N / D on the window.
"""

import dataclasses
import logging
from collections.abc import Sequence

from capverify.errors import CancellationOrderMismatch
from capverify.interval_core import ZERO, Interval
from capverify.quad_rigor import Enclosure, coefficient_moment, integrate_adaptive
from capverify.taylor_ad import TaylorJet, as_jet


logger = logging.getLogger(__name__)

DEFAULT_REMAINDER_PIECES = 32


def _horner(coeffs: Sequence[Interval], t: 'Interval | TaylorJet') -> 'Interval | TaylorJet':
    total = coeffs[-1]
    for coeff in reversed(coeffs[:-1]):
        total = total * t + coeff
    return total


@dataclasses.dataclass(frozen=True)
class CancelledRatio:
    """
    >>> from capverify.taylor_ad import jet_variable
    >>> y = jet_variable(0, 2)
    >>> cancel_expand(y * (y + 1), y, drop=1).jet().coeffs
    (Interval(lo=1.0, hi=1.0), Interval(lo=1.0, hi=1.0))
    """

    num: TaylorJet
    den: TaylorJet
    drop: int
    num_window: TaylorJet | None = None
    den_window: TaylorJet | None = None

    @property
    def point(self) -> Interval:
        return self.num.base

    @property
    def shifted_order(self) -> int:
        return self.num.order - self.drop

    @property
    def window(self) -> Interval:
        if self.num_window is None:
            raise ValueError('No window jets given, only the point expansion is available')
        return self.num_window.base

    def polynomials(self) -> tuple[tuple[Interval, ...], tuple[Interval, ...]]:
        """Shifted coefficients below the remainder order."""
        order = self.num.order
        return self.num.coeffs[self.drop : order], self.den.coeffs[self.drop : order]

    def remainders(self) -> tuple[Interval, Interval]:
        if self.num_window is None or self.den_window is None:
            raise ValueError('No window jets given, only the point expansion is available')
        order = self.num.order
        return self.num_window.coeffs[order], self.den_window.coeffs[order]

    def jet(self) -> TaylorJet:
        """Taylor jet of num / den at the expansion point, order reduced by `drop`."""
        num = TaylorJet(self.point, self.num.coeffs[self.drop :])
        den = TaylorJet(self.point, self.den.coeffs[self.drop :])
        return num / den

    def _check_inside(self, eta: Interval) -> None:
        if not self.window.contains(eta):
            raise ValueError(f'{eta} is outside of the expansion window {self.window}')

    def enclose(self, eta: Interval | float) -> Interval:
        """
        Enclosure of num(eta) / den(eta), with eta inside the window.
        """
        eta = Interval.point(eta)
        self._check_inside(eta)
        P, Q = self.polynomials()
        rho, sigma = self.remainders()
        t = eta - self.point
        power = t**self.shifted_order
        return (_horner(P, t) + rho * power) / (_horner(Q, t) + sigma * power)

    def integrate(
        self,
        lo: Interval | float,
        hi: Interval | float,
        tol: float,
        pieces: int = DEFAULT_REMAINDER_PIECES,
    ) -> Enclosure:
        """
        Integral of num / den over [lo, hi] inside the window.

        The polynomial quotient P/Q is integrated adaptively, the rest is
        (y-e)^m (rho Q - sigma P) / (D Q) and gets bounded piecewise by moments.
        """
        lo = Interval.point(lo)
        hi = Interval.point(hi)
        self._check_inside(lo.hull(hi))
        P, Q = self.polynomials()
        rho, sigma = self.remainders()
        point = self.point
        m = self.shifted_order

        def quotient(y: TaylorJet) -> TaylorJet:
            t = y - point
            return as_jet(_horner(P, t), like=y) / as_jet(_horner(Q, t), like=y)

        body = integrate_adaptive(quotient, lo, hi, tol=tol / 2)

        remainder = ZERO
        for piece in Interval(lo.lo, hi.hi).subdivide(pieces):
            t = piece - point
            p_range = _horner(P, t)
            q_range = _horner(Q, t)
            d_range = q_range + sigma * t**m
            factor = (rho * q_range - sigma * p_range) / (d_range * q_range)
            u0 = Interval.point(piece.lo) - point
            u1 = Interval.point(piece.hi) - point
            remainder = remainder + coefficient_moment(factor, m, u0, u1)
        logger.debug(f'Cancelled ratio on [{lo}, {hi}]: body {body.value}, remainder {remainder}')

        rest = Enclosure.build(ZERO, remainder, cells=pieces, scheme='cancel-remainder')
        return Enclosure.build(
            body.main,
            body.error_term + remainder,
            cells=body.cells + pieces,
            scheme='cancelled',
            parts=(('polynomial', body), ('remainder', rest)),
        )


def cancel_expand(
    num: TaylorJet,
    den: TaylorJet,
    drop: int,
    num_window: TaylorJet | None = None,
    den_window: TaylorJet | None = None,
) -> CancelledRatio:
    """
    Divide out (y - e)**drop from both jets. The caller guarantees that the dropped
    coefficients vanish, this only checks that their enclosures contain zero.
    """
    if drop < 0:
        raise ValueError(f'Cancellation order must be >= 0, got {drop}')
    if num.order != den.order or num.base != den.base:
        raise ValueError(
            f'Numerator and denominator jets do not match: {num.base}/{num.order} vs {den.base}/{den.order}'
        )
    if not num.base.is_thin:
        raise ValueError(f'Expansion point must be thin, got {num.base}')
    if drop >= num.order:
        raise CancellationOrderMismatch(f'Jets of order {num.order} cannot drop {drop} coefficients')
    for k in range(drop):
        for name, coeff in (('numerator', num.coeffs[k]), ('denominator', den.coeffs[k])):
            if not isinstance(coeff, Interval):
                raise ValueError(f'Cancellation needs scalar coefficients, {name} has a nested jet')
            if not coeff.contains_zero():
                raise CancellationOrderMismatch(f'Dropped {name} coefficient {k} is {coeff}, not zero')
    leading = den.coeffs[drop]
    if not isinstance(leading, Interval) or leading.contains_zero():
        raise CancellationOrderMismatch(f'Leading denominator coefficient {drop} is {leading}, it may vanish')

    if (num_window is None) != (den_window is None):
        raise ValueError('Window jets must be given for numerator and denominator')
    if num_window is not None and den_window is not None:
        if num_window.base != den_window.base:
            raise ValueError(f'Window bases differ: {num_window.base} != {den_window.base}')
        if num_window.order < num.order or den_window.order < num.order:
            raise ValueError(f'Window jets need order >= {num.order}')
        if not num_window.base.contains(num.base):
            raise ValueError(f'Window {num_window.base} does not contain the expansion point {num.base}')
    return CancelledRatio(num=num, den=den, drop=drop, num_window=num_window, den_window=den_window)
