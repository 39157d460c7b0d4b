"""
Verdicts on parameter cells (h2, K) of the confined inhomogeneous problem.

The time derivative of the tip height is C (I1 + I2) for some unknown C > 0, so only the
sign of I1 + I2 is used: positive means the curve does not turn, negative that it does.
"""

import dataclasses
import logging
from collections.abc import Callable
from enum import StrEnum

from capverify.errors import BudgetExhausted, DivisionByZeroInterval, DomainViolation, PositivityCertificateFailed
from capverify.interval_core import Interval
from capverify.muskat_verify.curves import H2_RANGE
from capverify.muskat_verify.integrals import DEFAULT_MUSKAT_TOL, i1
from capverify.muskat_verify.kernels import coarse_sign_enclosure, di2, i2
from capverify.quad_rigor import Enclosure
from capverify.quad_rigor.adaptive import DEFAULT_BUDGET
from capverify.reporting import strict_sign


logger = logging.getLogger(__name__)

CELL_TOL_SCALE = 0.05


class Verdict(StrEnum):
    TURN = 'Turn'
    NO_TURN = 'NoTurn'
    UNKNOWN = 'Unknown'


def verdict_from_sign(value: Interval) -> Verdict:
    """
    >>> verdict_from_sign(Interval(1, 2)), verdict_from_sign(Interval(-2, -1)), verdict_from_sign(Interval(-1, 1))
    (<Verdict.NO_TURN: 'NoTurn'>, <Verdict.TURN: 'Turn'>, <Verdict.UNKNOWN: 'Unknown'>)
    """
    return {1: Verdict.NO_TURN, -1: Verdict.TURN, 0: Verdict.UNKNOWN}[strict_sign(value)]


@dataclasses.dataclass(frozen=True)
class ParamCell:
    """
    >>> cell = ParamCell(Interval(0.25, 1.25), Interval(-0.5, 0.5))
    >>> [str(child.h2) for child in cell.children()]
    ['[0.25,0.75]', '[0.25,0.75]', '[0.75,1.25]', '[0.75,1.25]']
    >>> cell.area
    1.0
    """

    h2: Interval
    K: Interval
    depth: int = 0

    def __post_init__(self):
        if not H2_RANGE.contains(self.h2):
            raise ValueError(f'h2={self.h2} is not inside {H2_RANGE}')
        if not (self.K.lo > -1 and self.K.hi < 1):
            raise ValueError(f'K={self.K} is not inside (-1, 1)')
        if self.depth < 0:
            raise ValueError(f'Negative depth: {self.depth}')

    @classmethod
    def from_floats(cls, h2_lo: float, h2_hi: float, K_lo: float, K_hi: float, depth: int = 0) -> 'ParamCell':
        return cls(Interval(h2_lo, h2_hi), Interval(K_lo, K_hi), depth)

    @classmethod
    def point(cls, h2: float, K: float) -> 'ParamCell':
        return cls(Interval.point(h2), Interval.point(K))

    def children(self) -> tuple['ParamCell', ...]:
        """The four quadrants, ordered by (h2, K)."""
        return tuple(
            ParamCell(h2, K, self.depth + 1) for h2 in self.h2.bisect() for K in self.K.bisect()
        )

    @property
    def area(self) -> float:
        return (self.h2.hi - self.h2.lo) * (self.K.hi - self.K.lo)

    @property
    def sort_key(self) -> tuple[float, float]:
        return self.h2.lo, self.K.lo

    def __str__(self) -> str:
        return f'h2={self.h2} K={self.K}'


@dataclasses.dataclass(frozen=True)
class CellVerdict:
    cell: ParamCell
    verdict: Verdict
    enclosure: Interval
    i1: Interval | None = None
    i2: Interval | None = None
    note: str = ''


def settle(compute: Callable[[], Enclosure]) -> tuple[Enclosure, bool]:
    """
    Run one integral. A used up budget still gives a valid (wider) enclosure,
    the flag tells whether that happened.
    """
    try:
        return compute(), False
    except BudgetExhausted as err:
        logger.info(f'Budget exhausted: {err}')
        return err.enclosure, True


def cell_tolerance(cell: ParamCell, tol: float) -> float:
    """
    Quadrature tolerance for a parameter cell: proportional to its size, at least tol.

    >>> cell_tolerance(ParamCell.point(0.7, 0.0), 1e-4)
    0.0001
    >>> round(cell_tolerance(ParamCell.from_floats(0.5, 0.6, -0.1, 0.1), 1e-4), 6)
    0.015
    """
    return max(tol, CELL_TOL_SCALE * (cell.h2.width_up() + cell.K.width_up()))


def dt_rt_sign(
    cell: ParamCell, tol: float = DEFAULT_MUSKAT_TOL, budget: int = DEFAULT_BUDGET, coarse: bool = True
) -> CellVerdict:
    """
    Sign of I1 + I2 on a parameter cell. With coarse=True the range of the I2 integrand over the
    whole box is tried before the adaptive double integral.
    """
    cell_tol = cell_tolerance(cell, tol)
    try:
        first, first_exhausted = settle(lambda: i1(cell.h2, tol=cell_tol, budget=budget))
        if coarse:
            try:
                rough = coarse_sign_enclosure(cell.h2, cell.K, squared=False)
            except (DomainViolation, DivisionByZeroInterval) as err:
                logger.debug(f'{cell}: no integrand range ({err})')
                rough = Interval.entire()
            total = first.value + rough
            if strict_sign(total):
                verdict = verdict_from_sign(total)
                logger.debug(f'{cell}: I1+I2 = {total} -> {verdict} by the integrand range')
                return CellVerdict(cell, verdict, total, i1=first.value, i2=rough, note='integrand range')
        second, second_exhausted = settle(lambda: i2(cell.h2, cell.K, tol=cell_tol, budget=budget))
    except PositivityCertificateFailed as err:
        logger.warning(f'{cell}: {err}')
        return CellVerdict(cell, Verdict.UNKNOWN, Interval.entire(), note=str(err))

    total = first.value + second.value
    verdict = verdict_from_sign(total)
    note = 'budget exhausted' if (first_exhausted or second_exhausted) else ''
    logger.debug(f'{cell}: I1+I2 = {total} -> {verdict}')
    return CellVerdict(cell, verdict, total, i1=first.value, i2=second.value, note=note)


@dataclasses.dataclass(frozen=True)
class DI2Result:
    cell: ParamCell
    enclosure: Interval
    nonzero: bool
    method: str

    @property
    def sign(self) -> int:
        return strict_sign(self.enclosure)


def di2_nonzero(cell: ParamCell, tol: float = DEFAULT_MUSKAT_TOL, budget: int = DEFAULT_BUDGET) -> DI2Result:
    """
    Try the range of the integrand over the whole truncated box first: if the integrand has a
    certified sign there, the integral has it too. Otherwise integrate.
    """
    try:
        coarse = coarse_sign_enclosure(cell.h2, cell.K)
        if strict_sign(coarse):
            return DI2Result(cell, coarse, nonzero=True, method='integrand-sign')
        enclosure, exhausted = settle(lambda: di2(cell.h2, cell.K, tol=tol, budget=budget))
    except PositivityCertificateFailed as err:
        logger.warning(f'DI2 on {cell}: {err}')
        return DI2Result(cell, Interval.entire(), nonzero=False, method='failed')

    method = 'integral-budget-exhausted' if exhausted else 'integral'
    return DI2Result(cell, enclosure.value, nonzero=bool(strict_sign(enclosure.value)), method=method)
