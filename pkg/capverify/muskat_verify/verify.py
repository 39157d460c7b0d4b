"""
Verification pipelines of the Muskat sign conditions, each one ends in a ProofReport.
"""

import logging
import time
from collections.abc import Iterable
from pathlib import Path

from capverify.muskat_verify.curves import curve_bifurcation, curve_theorem1, cutoff_jump
from capverify.muskat_verify.decisions import ParamCell, di2_nonzero, settle
from capverify.muskat_verify.export import write_grid
from capverify.muskat_verify.integrals import DEFAULT_MUSKAT_TOL, a_confined, a_flat
from capverify.muskat_verify.scan import DEFAULT_BOX, DEFAULT_MAX_DEPTH, DEFAULT_SCAN_BUDGET, bifurcation_scan
from capverify.quad_rigor.adaptive import DEFAULT_BUDGET
from capverify.reporting import ProofReport, Status, status_from_checks, strict_sign


logger = logging.getLogger(__name__)

DEFAULT_COVERAGE = 0.8
DEFAULT_DI2_POINTS = ((0.65, 0.0), (0.68, 0.0), (0.71, 0.0), (0.74, 0.0), (0.77, 0.0))


def _expect_sign(value_sign: int, expected: int) -> bool | None:
    if value_sign == 0:
        return None
    return value_sign == expected


def verify_theorem1(tol: float = DEFAULT_MUSKAT_TOL, budget: int = DEFAULT_BUDGET, sign: int = 1) -> ProofReport:
    """
    PASS iff A_confined < 0 < A_flat for the explicit curve.
    `sign=-1` flips both integrands, which must give FAIL.
    """
    start = time.monotonic()
    report = ProofReport(command='verify muskat-t1', settings={'tol': tol, 'budget': budget, 'sign': sign})
    curve = curve_theorem1()

    confined, confined_exhausted = settle(lambda: a_confined(curve, tol, budget, sign))
    flat, flat_exhausted = settle(lambda: a_flat(curve, tol, budget, sign))
    confined_sign = strict_sign(confined.value)
    flat_sign = strict_sign(flat.value)
    report.add(
        'a_confined',
        confined,
        strictly_negative=confined_sign < 0,
        budget_exhausted=confined_exhausted,
    )
    report.add('a_flat', flat, strictly_positive=flat_sign > 0, budget_exhausted=flat_exhausted)

    report.status = status_from_checks([_expect_sign(confined_sign, -1), _expect_sign(flat_sign, 1)])
    report.wall_time = time.monotonic() - start
    logger.info(f'muskat-t1: A_confined={confined.value} A_flat={flat.value} -> {report.status}')
    return report


def verify_scan(
    box: ParamCell = DEFAULT_BOX,
    max_depth: int = DEFAULT_MAX_DEPTH,
    tol: float = DEFAULT_MUSKAT_TOL,
    budget: int = DEFAULT_SCAN_BUDGET,
    workers: int = 1,
    audit: bool = True,
    coverage: float = DEFAULT_COVERAGE,
    output_dir: Path | None = None,
) -> ProofReport:
    """
    FAIL on any contradiction (region claims, audited sub cells),
    PASS if at least `coverage` of the box area is decided, else UNKNOWN.
    """
    start = time.monotonic()
    report = ProofReport(
        command='verify muskat-scan',
        settings={
            'box': {'h2': box.h2, 'K': box.K},
            'max_depth': max_depth,
            'tol': tol,
            'budget': budget,
            'workers': workers,
            'audit': audit,
            'coverage': coverage,
        },
    )
    jump = cutoff_jump(curve_bifurcation(box.h2))
    report.add('cutoff_jump', jump, continuous=jump.contains(0))

    result = bifurcation_scan(box, max_depth=max_depth, tol=tol, budget=budget, workers=workers, audit=audit)
    report.add('coverage', **result.coverage())
    report.add('contradictions', items=result.contradictions)
    if output_dir is not None:
        csv_path, ppm_path = write_grid(result, output_dir)
        report.add('grid', csv=str(csv_path), ppm=str(ppm_path))

    if result.contradictions:
        report.status = Status.FAIL
    elif result.decided_fraction >= coverage:
        report.status = Status.PASS
    else:
        report.status = Status.UNKNOWN
    report.wall_time = time.monotonic() - start
    return report


def verify_di2(
    points: Iterable[tuple[float, float]] = DEFAULT_DI2_POINTS,
    tol: float = DEFAULT_MUSKAT_TOL,
    budget: int = DEFAULT_BUDGET,
) -> ProofReport:
    """PASS iff DI2 is certified nonzero at every (h2, K) point, otherwise UNKNOWN."""
    start = time.monotonic()
    points = list(points)
    report = ProofReport(
        command='verify muskat-di2',
        settings={'points': [list(point) for point in points], 'tol': tol, 'budget': budget},
    )
    checks = []
    for h2, K in points:
        result = di2_nonzero(ParamCell.point(h2, K), tol=tol, budget=budget)
        report.add(f'di2(h2={h2}, K={K})', result.enclosure, nonzero=result.nonzero, method=result.method)
        checks.append(True if result.nonzero else None)
    report.status = status_from_checks(checks)
    report.wall_time = time.monotonic() - start
    return report
