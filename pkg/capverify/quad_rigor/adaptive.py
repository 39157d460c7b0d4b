"""
Adaptive 1D quadrature: Taylor panels, bisection of the widest panel.
"""

import dataclasses
import heapq
import logging
from collections.abc import Iterable

from capverify.errors import BudgetExhausted, DivisionByZeroInterval, DomainViolation
from capverify.interval_core import ZERO, Interval
from capverify.quad_rigor.enclosure import Enclosure
from capverify.quad_rigor.integrands import PiecewiseJetFunction, split_thick_bounds, value_enclosure
from capverify.quad_rigor.taylor import taylor_panel
from capverify.taylor_ad import JetFunction
from capverify.taylor_ad.remainder import CenterType


logger = logging.getLogger(__name__)

DEFAULT_ORDER = 8
DEFAULT_BUDGET = 20_000


@dataclasses.dataclass(frozen=True)
class Panel:
    lo: float
    hi: float
    main: Interval
    error: Interval
    sliver: bool = False

    @property
    def width(self) -> float:
        return (self.main + self.error).width_up()

    @property
    def splittable(self) -> bool:
        if self.sliver:
            return False
        mid = Interval(self.lo, self.hi).mid
        return self.lo < mid < self.hi


def range_panel(f: JetFunction, lo: float, hi: float) -> Panel:
    """Integral over a (tiny) panel as range times length."""
    panel = Interval(lo, hi)
    return Panel(lo, hi, main=ZERO, error=value_enclosure(f, panel) * panel.width(), sliver=True)


def _initial_nodes(lo: float, hi: float, breakpoints: Iterable[Interval]) -> list[tuple[float, float, bool]]:
    """Panels (lo, hi, sliver) split exactly at the breakpoints, thick breakpoints become slivers."""
    cuts = []
    for breakpoint in sorted(breakpoints, key=lambda bp: bp.lo):
        if breakpoint.hi <= lo or breakpoint.lo >= hi:
            continue
        cuts.append((max(breakpoint.lo, lo), min(breakpoint.hi, hi)))
    panels = []
    start = lo
    for cut_lo, cut_hi in cuts:
        if cut_lo > start:
            panels.append((start, cut_lo, False))
        if cut_hi > cut_lo:
            panels.append((max(cut_lo, start), cut_hi, True))
        start = max(start, cut_hi)
    if hi > start:
        panels.append((start, hi, False))
    return panels


class _PanelEvaluator:
    def __init__(self, f: JetFunction, order: int, center: CenterType, budget: int):
        self.f = f
        self.order = order
        self.center = center
        self.budget = budget
        self.evaluations = 0

    def __call__(self, lo: float, hi: float) -> list[Panel]:
        """Evaluate a panel, bisect it while the jets leave their domain."""
        pending = [(lo, hi)]
        done = []
        while pending:
            lo, hi = pending.pop()
            self.evaluations += 1
            try:
                main, error = taylor_panel(self.f, lo, hi, self.order, self.center)
            except (DomainViolation, DivisionByZeroInterval) as err:
                mid = Interval(lo, hi).mid
                if not (lo < mid < hi) or self.evaluations >= self.budget:
                    # last resort: may raise the error again
                    logger.debug(f'Taylor panel [{lo}, {hi}] failed ({err}), use range bound')
                    done.append(range_panel(self.f, lo, hi))
                    continue
                pending.append((mid, hi))
                pending.append((lo, mid))
                continue
            done.append(Panel(lo, hi, main, error))
        return done


def _assemble(panels: Iterable[Panel], sliver: Interval, scheme: str, count: int) -> Enclosure:
    main = ZERO
    error = sliver
    for panel in sorted(panels, key=lambda p: (p.lo, p.hi)):
        main = main + panel.main
        error = error + panel.error
    return Enclosure.build(main, error, cells=max(count, 1), scheme=scheme)


def integrate_adaptive(
    f: JetFunction,
    a: Interval | float,
    b: Interval | float,
    tol: float,
    budget: int = DEFAULT_BUDGET,
    breakpoints: Iterable[Interval | float] = (),
    order: int = DEFAULT_ORDER,
    center: CenterType = 'midpoint',
) -> Enclosure:
    """
    Bisect the widest panel until the enclosure is narrower than tol.

    >>> from capverify.taylor_ad import jet_exp
    >>> e = integrate_adaptive(jet_exp, 0, 1, tol=1e-8)
    >>> e.width() <= 1e-8, e.value.contains(1.718281828459045)
    (True, True)
    """
    if not tol > 0:
        raise ValueError(f'Tolerance must be > 0, got {tol}')
    a = Interval.point(a)
    b = Interval.point(b)
    breakpoints = [Interval.point(bp) for bp in breakpoints]
    if isinstance(f, PiecewiseJetFunction):
        breakpoints.extend(f.breakpoints)
    scheme = f'adaptive-taylor{order}'

    lo, hi, sliver = split_thick_bounds(f, a, b)
    evaluate = _PanelEvaluator(f, order, center, budget)

    # heap entries: (-width, lo, hi, panel)
    heap: list[tuple[float, float, float, Panel]] = []
    fixed: list[Panel] = []

    def push(panel: Panel) -> None:
        if panel.splittable:
            heapq.heappush(heap, (-panel.width, panel.lo, panel.hi, panel))
        else:
            fixed.append(panel)

    if hi > lo:
        for panel_lo, panel_hi, is_sliver in _initial_nodes(lo, hi, breakpoints):
            if is_sliver:
                push(range_panel(f, panel_lo, panel_hi))
            else:
                for panel in evaluate(panel_lo, panel_hi):
                    push(panel)

    def current() -> Enclosure:
        return _assemble([entry[3] for entry in heap] + fixed, sliver, scheme, len(heap) + len(fixed))

    width_sum = sum(-entry[0] for entry in heap) + sum(panel.width for panel in fixed) + sliver.width_up()
    while True:
        if width_sum <= tol:
            enclosure = current()
            if enclosure.width() <= tol:
                logger.debug(f'{scheme}: {enclosure.cells} panels, {evaluate.evaluations} evaluations')
                return enclosure
        if not heap:
            raise BudgetExhausted(f'No splittable panel left, width {current().width()} > {tol}', enclosure=current())
        if evaluate.evaluations >= budget:
            enclosure = current()
            logger.info(f'{scheme}: budget of {budget} evaluations exhausted, width {enclosure.width()}')
            raise BudgetExhausted(f'Budget {budget} exhausted, width {enclosure.width()} > {tol}', enclosure=enclosure)
        negative_width, panel_lo, panel_hi, _ = heapq.heappop(heap)
        width_sum += negative_width
        mid = Interval(panel_lo, panel_hi).mid
        for half_lo, half_hi in ((panel_lo, mid), (mid, panel_hi)):
            for panel in evaluate(half_lo, half_hi):
                push(panel)
                width_sum += panel.width
