"""
Adaptive quadtree over the (h2, K) box: cells whose verdict is Unknown are split into
quadrants up to a maximal depth.
"""

import dataclasses
import functools
import logging
import multiprocessing
from contextlib import nullcontext

from capverify.interval_core import Interval
from capverify.muskat_verify.decisions import CellVerdict, ParamCell, Verdict, dt_rt_sign
from capverify.muskat_verify.integrals import DEFAULT_MUSKAT_TOL


logger = logging.getLogger(__name__)

DEFAULT_BOX = ParamCell(Interval(0.25, 1.25), Interval(-0.99, 0.99))
DEFAULT_MAX_DEPTH = 5
DEFAULT_SCAN_BUDGET = 2000  # cells per double integral

# The curve never turns for h2 below, always turns for h2 above (whatever K is):
NO_TURN_BELOW = 0.648
TURN_ABOVE = 0.77

OPPOSITE = {Verdict.TURN: Verdict.NO_TURN, Verdict.NO_TURN: Verdict.TURN}


@dataclasses.dataclass
class ScanResult:
    box: ParamCell
    max_depth: int
    leaves: list[CellVerdict]
    evaluated: int
    contradictions: list[str] = dataclasses.field(default_factory=list)

    def area_fraction(self, verdict: Verdict) -> float:
        area = sum(leaf.cell.area for leaf in self.leaves if leaf.verdict == verdict)
        return area / self.box.area

    @property
    def decided_fraction(self) -> float:
        return self.area_fraction(Verdict.TURN) + self.area_fraction(Verdict.NO_TURN)

    def coverage(self) -> dict:
        return {
            'turn': self.area_fraction(Verdict.TURN),
            'no_turn': self.area_fraction(Verdict.NO_TURN),
            'unknown': self.area_fraction(Verdict.UNKNOWN),
            'decided': self.decided_fraction,
            'leaves': len(self.leaves),
            'evaluated_cells': self.evaluated,
        }


def region_claim(cell: ParamCell) -> Verdict | None:
    """
    >>> region_claim(ParamCell.point(0.5, 0.0)), region_claim(ParamCell.point(1.0, 0.0))
    (<Verdict.NO_TURN: 'NoTurn'>, <Verdict.TURN: 'Turn'>)
    >>> region_claim(ParamCell.point(0.7, 0.0)) is None
    True
    """
    if cell.h2.hi < NO_TURN_BELOW:
        return Verdict.NO_TURN
    if cell.h2.lo > TURN_ABOVE:
        return Verdict.TURN
    return None


def check_region_claims(leaves: list[CellVerdict]) -> list[str]:
    problems = []
    for leaf in leaves:
        claim = region_claim(leaf.cell)
        if claim is not None and leaf.verdict == OPPOSITE[claim]:
            problems.append(f'{leaf.cell}: {leaf.verdict} but {claim} expected')
    return problems


def audit_cell(parent: CellVerdict, tol: float = DEFAULT_MUSKAT_TOL, budget: int = DEFAULT_SCAN_BUDGET) -> list[str]:
    """A decided cell must not contain a sub cell with the opposite verdict."""
    if parent.verdict == Verdict.UNKNOWN:
        return []
    problems = []
    for child in parent.cell.children():
        result = dt_rt_sign(child, tol=tol, budget=budget)
        if result.verdict == OPPOSITE[parent.verdict]:
            problems.append(f'{child}: {result.verdict} inside {parent.verdict} cell {parent.cell}')
    return problems


def _evaluate(cells: list[ParamCell], tol: float, budget: int, pool) -> list[CellVerdict]:
    func = functools.partial(dt_rt_sign, tol=tol, budget=budget)
    if pool is None:
        return [func(cell) for cell in cells]
    return pool.map(func, cells)


def bifurcation_scan(
    box: ParamCell = DEFAULT_BOX,
    max_depth: int = DEFAULT_MAX_DEPTH,
    tol: float = DEFAULT_MUSKAT_TOL,
    budget: int = DEFAULT_SCAN_BUDGET,
    workers: int = 1,
    audit: bool = True,
) -> ScanResult:
    """
    Breadth first: all cells of one depth are evaluated together (in parallel with workers > 1).
    The leaves are sorted by their lower left corner, so the result does not depend on workers.
    With audit every decided leaf is split once more and none of its quadrants may get the opposite verdict.
    """
    if max_depth < 0:
        raise ValueError(f'max_depth must be >= 0, got {max_depth}')
    if workers < 1:
        raise ValueError(f'workers must be >= 1, got {workers}')

    leaves: list[CellVerdict] = []
    level = [dataclasses.replace(box, depth=0)]
    evaluated = 0
    with multiprocessing.Pool(workers) if workers > 1 else nullcontext() as pool:
        while level:
            verdicts = _evaluate(level, tol, budget, pool)
            evaluated += len(verdicts)
            next_level = []
            for verdict in verdicts:
                if verdict.verdict == Verdict.UNKNOWN and verdict.cell.depth < max_depth:
                    next_level.extend(verdict.cell.children())
                else:
                    leaves.append(verdict)
            logger.info(f'Depth {level[0].depth}: {len(level)} cells, {len(next_level)} to split')
            level = next_level

    leaves.sort(key=lambda leaf: leaf.cell.sort_key)
    result = ScanResult(box=box, max_depth=max_depth, leaves=leaves, evaluated=evaluated)
    result.contradictions.extend(check_region_claims(leaves))
    if audit:
        for leaf in leaves:
            result.contradictions.extend(audit_cell(leaf, tol=tol, budget=budget))
    for problem in result.contradictions:
        logger.error(f'Contradiction: {problem}')
    logger.info(f'Scan done: {result.decided_fraction:.2%} of the box decided')
    return result
