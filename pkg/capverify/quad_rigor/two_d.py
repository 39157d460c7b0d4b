"""
Adaptive tensor product Taylor quadrature on rectangles.

On a cell with center (cx, cy) the integrand is expanded as

    f = sum_{i<p, j<q} a_ij (x-cx)^i (y-cy)^j + sum_{i<p} (x-cx)^i (y-cy)^q S_i + (x-cx)^p R

where a_ij are the mixed coefficients at the center, S_i the q-th y coefficient of the i-th
x coefficient over the y range and R the p-th x coefficient over the whole cell. All of them
come from nested jets: an outer jet in y whose coefficients are jets in x.
"""

import dataclasses
import heapq
import logging
from collections.abc import Iterable, Sequence

from capverify.errors import BudgetExhausted, DivisionByZeroInterval, DomainViolation, NonOrderedBounds
from capverify.interval_core import ZERO, Interval
from capverify.quad_rigor.adaptive import DEFAULT_BUDGET, _initial_nodes
from capverify.quad_rigor.enclosure import Enclosure
from capverify.quad_rigor.integrands import BivariateJetFunction
from capverify.quad_rigor.moments import coefficient_moment, power_moment
from capverify.taylor_ad import TaylorJet, as_jet, bivariate_seeds
from capverify.taylor_ad.jet import inner_coefficients


logger = logging.getLogger(__name__)

DEFAULT_ORDER_2D = 4

Bounds = tuple[float, float, float, float]


@dataclasses.dataclass(frozen=True)
class Cell:
    x_lo: float
    x_hi: float
    y_lo: float
    y_hi: float
    main: Interval
    error: Interval
    split_x: bool = True
    sliver: bool = False

    @property
    def width(self) -> float:
        return (self.main + self.error).width_up()

    @property
    def splittable(self) -> bool:
        if self.sliver:
            return False
        if self.split_x:
            mid = Interval(self.x_lo, self.x_hi).mid
            return self.x_lo < mid < self.x_hi
        mid = Interval(self.y_lo, self.y_hi).mid
        return self.y_lo < mid < self.y_hi

    def halves(self) -> tuple[Bounds, Bounds]:
        if self.split_x:
            mid = Interval(self.x_lo, self.x_hi).mid
            return (self.x_lo, mid, self.y_lo, self.y_hi), (mid, self.x_hi, self.y_lo, self.y_hi)
        mid = Interval(self.y_lo, self.y_hi).mid
        return (self.x_lo, self.x_hi, self.y_lo, mid), (self.x_lo, self.x_hi, mid, self.y_hi)


def evaluate_nested(
    f: BivariateJetFunction,
    x_base: Interval,
    x_order: int,
    y_base: Interval,
    y_order: int,
) -> TaylorJet:
    X, Y = bivariate_seeds(x_base, x_order, y_base, y_order)
    return as_jet(f(X, Y), like=Y)


def range_enclosure_2d(f: BivariateJetFunction, x: Interval, y: Interval) -> Interval:
    jet = evaluate_nested(f, x, 0, y, 0)
    return inner_coefficients(jet.coeffs[0], 0)[0]


def range_cell(f: BivariateJetFunction, x_lo: float, x_hi: float, y_lo: float, y_hi: float, sliver: bool) -> Cell:
    x = Interval(x_lo, x_hi)
    y = Interval(y_lo, y_hi)
    error = range_enclosure_2d(f, x, y) * x.width() * y.width()
    return Cell(x_lo, x_hi, y_lo, y_hi, main=ZERO, error=error, split_x=x.width_up() >= y.width_up(), sliver=sliver)


def tensor_cell(f: BivariateJetFunction, x_lo: float, x_hi: float, y_lo: float, y_hi: float, order: int) -> Cell:
    p = q = order
    x = Interval(x_lo, x_hi)
    y = Interval(y_lo, y_hi)
    cx = x.midpoint()
    cy = y.midpoint()
    ux0, ux1 = Interval.point(x_lo) - cx, Interval.point(x_hi) - cx
    uy0, uy1 = Interval.point(y_lo) - cy, Interval.point(y_hi) - cy
    mx = [power_moment(i, ux0, ux1) for i in range(p)]
    my = [power_moment(j, uy0, uy1) for j in range(q)]

    center_jet = evaluate_nested(f, cx, p - 1, cy, q - 1)
    main = ZERO
    for j in range(q):
        column = inner_coefficients(center_jet.coeffs[j], p - 1)
        for i in range(p):
            main = main + column[i] * mx[i] * my[j]

    y_jet = evaluate_nested(f, cx, p - 1, y, q)
    s = inner_coefficients(y_jet.coeffs[q], p - 1)
    y_error = ZERO
    for i in range(p):
        y_error = y_error + mx[i] * coefficient_moment(s[i], q, uy0, uy1)

    x_jet = evaluate_nested(f, x, p, y, 0)
    r = inner_coefficients(x_jet.coeffs[0], p)[p]
    x_error = coefficient_moment(r, p, ux0, ux1) * y.width()

    return Cell(
        x_lo,
        x_hi,
        y_lo,
        y_hi,
        main=main,
        error=x_error + y_error,
        split_x=x_error.width_up() >= y_error.width_up(),
    )


class _CellEvaluator:
    def __init__(self, f: BivariateJetFunction, order: int, budget: int):
        self.f = f
        self.order = order
        self.budget = budget
        self.evaluations = 0

    def __call__(self, x_lo: float, x_hi: float, y_lo: float, y_hi: float) -> list[Cell]:
        """Evaluate a cell, bisect its longer side while the jets leave their domain."""
        pending = [(x_lo, x_hi, y_lo, y_hi)]
        done = []
        while pending:
            bounds = pending.pop()
            self.evaluations += 1
            try:
                cell = tensor_cell(self.f, *bounds, self.order)
            except (DomainViolation, DivisionByZeroInterval) as err:
                halves = _bisect_longer(*bounds)
                if halves is None or self.evaluations >= self.budget:
                    # last resort: may raise the error again
                    logger.debug(f'Tensor cell {bounds} failed ({err}), use range bound')
                    done.append(range_cell(self.f, *bounds, sliver=False))
                else:
                    pending.extend(reversed(halves))
                continue
            done.append(cell)
        return done


def _bisect_longer(x_lo: float, x_hi: float, y_lo: float, y_hi: float) -> tuple[Bounds, Bounds] | None:
    x_mid = Interval(x_lo, x_hi).mid
    y_mid = Interval(y_lo, y_hi).mid
    x_ok = x_lo < x_mid < x_hi
    y_ok = y_lo < y_mid < y_hi
    if x_ok and (x_hi - x_lo >= y_hi - y_lo or not y_ok):
        return (x_lo, x_mid, y_lo, y_hi), (x_mid, x_hi, y_lo, y_hi)
    if y_ok:
        return (x_lo, x_hi, y_lo, y_mid), (x_lo, x_hi, y_mid, y_hi)
    return None


def _strips(f: BivariateJetFunction, box_x: Interval, box_y: Interval, lo_x, hi_x, lo_y, hi_y) -> Interval:
    """Range bounds of the slivers between thick box edges and the float core."""
    error = ZERO
    y_span = box_y[1] - box_y[0]
    if not box_x[0].is_thin:
        region = Interval(box_x[0].lo, box_x[0].hi)
        error = error + range_enclosure_2d(f, region, Interval(box_y[0].lo, box_y[1].hi)) * Interval(
            0.0, region.width_up()
        ) * y_span
    if not box_x[1].is_thin:
        region = Interval(box_x[1].lo, box_x[1].hi)
        error = error + range_enclosure_2d(f, region, Interval(box_y[0].lo, box_y[1].hi)) * Interval(
            0.0, region.width_up()
        ) * y_span
    core_x = Interval(lo_x, hi_x)
    for edge in (box_y[0], box_y[1]):
        if not edge.is_thin:
            error = error + range_enclosure_2d(f, core_x, edge) * core_x.width() * Interval(0.0, edge.width_up())
    return error


def _assemble(cells: Iterable[Cell], strips: Interval, count: int) -> Enclosure:
    main = ZERO
    error = strips
    for cell in sorted(cells, key=lambda c: (c.x_lo, c.y_lo)):
        main = main + cell.main
        error = error + cell.error
    return Enclosure.build(main, error, cells=max(count, 1), scheme='tensor-taylor')


def integrate_2d(
    f: BivariateJetFunction,
    box: tuple[Interval | float, Interval | float, Interval | float, Interval | float],
    tol: float,
    budget: int = DEFAULT_BUDGET,
    breakpoints: tuple[Sequence[Interval | float], Sequence[Interval | float]] = ((), ()),
    order: int = DEFAULT_ORDER_2D,
) -> Enclosure:
    """
    Integral of f(x, y) over box = (x0, x1, y0, y1).

    >>> e = integrate_2d(lambda x, y: x * y, (0, 1, 0, 1), tol=1e-6)
    >>> e.value.contains(0.25), e.width() <= 1e-6
    (True, True)
    """
    if not tol > 0:
        raise ValueError(f'Tolerance must be > 0, got {tol}')
    if order < 1:
        raise ValueError(f'Order must be >= 1, got {order}')
    x0, x1, y0, y1 = (Interval.point(bound) for bound in box)
    if x0.lo > x1.hi or y0.lo > y1.hi:
        raise NonOrderedBounds(f'Box edges are not ordered: {box}')
    if x0.hi > x1.lo or y0.hi > y1.lo:
        raise NonOrderedBounds(f'Thick box edges overlap: {box}')
    lo_x, hi_x, lo_y, hi_y = x0.hi, x1.lo, y0.hi, y1.lo
    strips = _strips(f, (x0, x1), (y0, y1), lo_x, hi_x, lo_y, hi_y)

    evaluate = _CellEvaluator(f, order, budget)

    heap: list[tuple[float, float, float, Cell]] = []
    fixed: list[Cell] = []

    def push(cell: Cell) -> None:
        if cell.splittable:
            heapq.heappush(heap, (-cell.width, cell.x_lo, cell.y_lo, cell))
        else:
            fixed.append(cell)

    x_breaks = [Interval.point(bp) for bp in breakpoints[0]]
    y_breaks = [Interval.point(bp) for bp in breakpoints[1]]
    if hi_x > lo_x and hi_y > lo_y:
        for cx_lo, cx_hi, x_sliver in _initial_nodes(lo_x, hi_x, x_breaks):
            for cy_lo, cy_hi, y_sliver in _initial_nodes(lo_y, hi_y, y_breaks):
                if x_sliver or y_sliver:
                    push(range_cell(f, cx_lo, cx_hi, cy_lo, cy_hi, sliver=True))
                else:
                    for cell in evaluate(cx_lo, cx_hi, cy_lo, cy_hi):
                        push(cell)

    def current() -> Enclosure:
        return _assemble([entry[3] for entry in heap] + fixed, strips, len(heap) + len(fixed))

    width_sum = sum(-entry[0] for entry in heap) + sum(cell.width for cell in fixed) + strips.width_up()
    while True:
        if width_sum <= tol:
            enclosure = current()
            if enclosure.width() <= tol:
                logger.debug(f'2D quadrature: {enclosure.cells} cells, {evaluate.evaluations} evaluations')
                return enclosure
        if not heap:
            enclosure = current()
            raise BudgetExhausted(f'No splittable cell left, width {enclosure.width()} > {tol}', enclosure=enclosure)
        if evaluate.evaluations >= budget:
            enclosure = current()
            logger.info(f'2D quadrature: budget of {budget} exhausted, width {enclosure.width()}')
            raise BudgetExhausted(f'Budget {budget} exhausted, width {enclosure.width()} > {tol}', enclosure=enclosure)
        negative_width, _, _, cell = heapq.heappop(heap)
        width_sum += negative_width
        for bounds in cell.halves():
            for child in evaluate(*bounds):
                push(child)
                width_sum += child.width
