import dataclasses
import logging
from collections.abc import Callable
from typing import Literal

from capverify.interval_core import ZERO, Interval
from capverify.taylor_ad.jet import TaylorJet, as_jet, jet_variable


logger = logging.getLogger(__name__)

# Anything that maps a jet to a jet (constants are promoted with as_jet()):
JetFunction = Callable[[TaylorJet], 'TaylorJet | Interval | int | float']

CenterType = Literal['left', 'midpoint'] | float


def evaluate_jet(func: JetFunction, base: Interval | float, order: int) -> TaylorJet:
    """Jet of func at base, constant results promoted to a constant jet."""
    x = jet_variable(base, order)
    return as_jet(func(x), like=x)


def resolve_center(domain: Interval, center: CenterType) -> Interval:
    if center == 'left':
        return Interval.point(domain.lo)
    if center == 'midpoint':
        return domain.midpoint()
    if isinstance(center, str):
        raise ValueError(f'Unknown center {center!r}')
    point = Interval.point(center)
    if not domain.contains(point):
        raise ValueError(f'Center {center!r} outside of {domain}')
    return point


@dataclasses.dataclass(frozen=True)
class TaylorExpansion:
    """
    f(x) in sum(coeffs[k] * (x - center)**k) + remainder * (x - center)**(order + 1)
    for every x in domain.
    """

    center: Interval
    domain: Interval
    coeffs: tuple[Interval, ...]
    remainder: Interval

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, x: Interval | float) -> Interval:
        x = Interval.point(x)
        if not self.domain.contains(x):
            raise ValueError(f'{x} is not inside the expansion domain {self.domain}')
        offset = x - self.center
        total = self.remainder
        for coeff in reversed(self.coeffs):
            total = coeff + offset * total
        return total

    def range_enclosure(self) -> Interval:
        return self.evaluate(self.domain)


def jet_eval_remainder(
    expr: JetFunction,
    domain: Interval,
    order: int,
    center: CenterType = 'left',
) -> TaylorExpansion:
    """
    Degree `order` Taylor polynomial at the center plus the next coefficient over the whole domain.

    >>> from capverify.taylor_ad.functions import jet_exp
    >>> expansion = jet_eval_remainder(jet_exp, Interval(0, 1), order=3)
    >>> [c.contains(v) for c, v in zip(expansion.coeffs, (1, 1, 0.5))]
    [True, True, True]
    >>> expansion.remainder.lo <= 1 / 24 and expansion.remainder.hi >= 2.718281828 / 24
    True
    """
    if order < 0:
        raise ValueError(f'Order must be >= 0, got {order}')
    point = resolve_center(domain, center)
    polynomial = evaluate_jet(expr, point, order)
    if domain.is_thin:
        remainder = ZERO
    else:
        remainder = evaluate_jet(expr, domain, order + 1).coeffs[order + 1]
    return TaylorExpansion(center=point, domain=domain, coeffs=polynomial.coeffs, remainder=remainder)
