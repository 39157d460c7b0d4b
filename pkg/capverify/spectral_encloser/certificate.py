"""
Real eigenpair certificate for a nearly symmetric operator A = S + N:

S symmetric with lowest eigenvalue in lambda_star, isolated from the rest of its spectrum by gap,
and ||N|| <= anti_norm. Every eigenvalue of A lies within anti_norm of the spectrum of S. If
2 anti_norm < gap, the disc of radius anti_norm around the lowest eigenvalue holds exactly one
eigenvalue of A. A is real, so its conjugate lies in the same disc: the eigenvalue is real.
"""

import dataclasses
import logging

import numpy as np

from capverify.errors import CertificateFailed
from capverify.interval_core import ZERO, Interval
from capverify.spectral_encloser.discretize import OperatorEnclosure
from capverify.spectral_encloser.linalg import IntervalMatrix, gershgorin_discs, gershgorin_lower_bound, ldl_inertia


logger = logging.getLogger(__name__)

MAX_SHIFT_TRIES = 30
SHIFT_GROWTH = 4.0


def symmetric_split(operator: OperatorEnclosure | IntervalMatrix) -> tuple[IntervalMatrix, Interval]:
    """
    S = (M + M^T) / 2 and a bound of ||(M - M^T) / 2||_2 plus the truncation.

    >>> S, anti = symmetric_split(IntervalMatrix.from_array([[0, 1], [-1, 0]]))
    >>> S[0, 1], anti
    (Interval(lo=0.0, hi=0.0), Interval(lo=0.0, hi=1.0))
    """
    if isinstance(operator, OperatorEnclosure):
        M = operator.M
        truncation = operator.truncation
    else:
        M = operator
        truncation = ZERO
    Mt = M.transpose()
    S = (M + Mt).scaled(0.5)
    anti = (M - Mt).scaled(0.5).spectral_norm_bound() + truncation
    return S, Interval(0.0, anti.hi)


@dataclasses.dataclass(frozen=True)
class SpectrumBounds:
    lambda_star: Interval
    gap: Interval
    second: Interval
    method: str


def _count(S: IntervalMatrix, sigma: float) -> int | None:
    try:
        return ldl_inertia(S, sigma)
    except CertificateFailed as err:
        logger.debug(str(err))
        return None


def _shifts(center: float, start: float, sign: float):
    delta = start
    for _ in range(MAX_SHIFT_TRIES):
        yield center + sign * delta
        delta *= SHIFT_GROWTH


def symmetric_spectrum_bounds(S: IntervalMatrix, probes=None) -> SpectrumBounds:
    """
    The floating eigen decomposition of the midpoint matrix only gives hints. Certified are:
    an upper bound of the lowest eigenvalue by the Rayleigh quotient of the first probe, and
    lower bounds by LDL^T inertia counts of shifted matrices (Gershgorin as a fallback for the first).

    >>> bounds = symmetric_spectrum_bounds(IntervalMatrix.from_array(np.diag([1.0, 2.0, 3.0])))
    >>> bounds.lambda_star.contains(1), bounds.gap.contains(1)
    (True, True)
    """
    n = S.n
    if n < 2:
        raise ValueError('A spectral gap needs at least a 2x2 matrix')
    mid = S.mid()
    hints, vectors = np.linalg.eigh((mid + mid.T) / 2)
    if probes is None:
        probes = vectors.T
    probes = np.asarray(probes, dtype=float)

    upper = S.quadratic_form(probes[0]).hi
    scale = max(1.0, float(np.max(np.abs(mid))))
    start = float(np.max(np.sum(S.radius(), axis=1))) + 1e-12 * scale * n

    lower = None
    method = 'inertia'
    for sigma in _shifts(float(hints[0]), start, -1.0):
        if _count(S, sigma) == 0:
            lower = sigma
            break
    if lower is None:
        lower = gershgorin_lower_bound(S)
        method = 'gershgorin'
    lower = min(lower, upper)

    second_lower = None
    for sigma in _shifts(float(hints[1]), start, -1.0):
        if sigma <= upper:
            break
        if _count(S, sigma) == 1:
            second_lower = sigma
            break
    if second_lower is None:
        raise CertificateFailed(f'No shift between {upper} and {hints[1]} with exactly one eigenvalue below')

    second_upper = None
    for sigma in _shifts(float(hints[1]), start, 1.0):
        count = _count(S, sigma)
        if count is not None and count >= 2:
            second_upper = sigma
            break
    if second_upper is None:
        second_upper = max((center + radius).hi for center, radius in gershgorin_discs(S))

    lambda_star = Interval(lower, upper)
    second = Interval(second_lower, second_upper)
    gap = Interval((second.lo - Interval.point(upper)).lo, (second.hi - Interval.point(lower)).hi)
    logger.info(f'Lowest eigenvalue in {lambda_star}, next in {second}, gap {gap} ({method})')
    return SpectrumBounds(lambda_star=lambda_star, gap=gap, second=second, method=method)


@dataclasses.dataclass(frozen=True)
class EigenCertificate:
    lambda_star: Interval
    gap: Interval
    anti_norm: Interval
    disc_radius: Interval
    real_eigen_ok: bool
    eigenvalue: Interval | None = None
    reason: str = ''


def real_eigenpair_certificate(lambda_star: Interval, gap: Interval, anti_norm: Interval) -> EigenCertificate:
    """
    >>> cert = real_eigenpair_certificate(Interval(-1, -1), Interval(1, 1), Interval(0, 0.4))
    >>> cert.real_eigen_ok, cert.disc_radius
    (True, Interval(lo=0.0, hi=0.4))
    """
    ok = (anti_norm * 2).certainly_lt(gap)
    if ok:
        radius = anti_norm.magnitude()
        eigenvalue = lambda_star + Interval(-radius, radius)
        reason = f'2 * {anti_norm.hi} < {gap.lo}'
    else:
        eigenvalue = None
        reason = f'2 * {anti_norm.hi} >= {gap.lo}: discs may overlap'
    logger.info(f'Real eigenpair certificate: {ok} ({reason})')
    return EigenCertificate(
        lambda_star=lambda_star,
        gap=gap,
        anti_norm=anti_norm,
        disc_radius=anti_norm,
        real_eigen_ok=ok,
        eigenvalue=eigenvalue,
        reason=reason,
    )
