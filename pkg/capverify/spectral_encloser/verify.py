import logging
import time

from capverify.errors import CertificateFailed
from capverify.interval_core import Interval
from capverify.reporting import ProofReport, Status
from capverify.spectral_encloser.certificate import (
    real_eigenpair_certificate,
    symmetric_spectrum_bounds,
    symmetric_split,
)
from capverify.spectral_encloser.discretize import DEFAULT_CELLS, OperatorEnclosure, discretize
from capverify.spectral_encloser.profile import build_profile, seam_continuity


logger = logging.getLogger(__name__)


def complement_gap(operator: OperatorEnclosure, lambda_star: Interval) -> Interval:
    """
    Off range(P) the surrogate multiplies by the cell constants: they belong to the rest of the spectrum too.
    """
    lowest = min(value.midpoint().lo for value in operator.diag_mult)
    return Interval.point(lowest) - lambda_star


def verify_spectral(n: int = DEFAULT_CELLS, a_inner: float = 0.95, a_outer: float = 1.0) -> ProofReport:
    """
    PASS iff the real eigenpair certificate holds for the surrogate of rank n,
    UNKNOWN if it cannot be established. Never FAIL: no certificate is no counter example.
    """
    start = time.monotonic()
    report = ProofReport(command='verify spectral', settings={'n': n, 'a_inner': a_inner, 'a_outer': a_outer})
    profile = build_profile(a_inner, a_outer)
    report.add('seam_continuity', **seam_continuity(profile))

    operator = discretize(profile, n)
    report.add('operator', **operator.summary())
    S, anti_norm = symmetric_split(operator)
    try:
        bounds = symmetric_spectrum_bounds(S)
    except CertificateFailed as err:
        logger.warning(f'Spectrum bounds failed: {err}')
        report.add('spectrum', error=str(err))
        report.status = Status.UNKNOWN
        report.wall_time = time.monotonic() - start
        return report

    rest = complement_gap(operator, bounds.lambda_star)
    gap = bounds.gap if rest.lo >= bounds.gap.lo else Interval(rest.lo, bounds.gap.hi)
    report.add('spectrum', lambda_star=bounds.lambda_star, gap=gap, second=bounds.second, method=bounds.method)

    certificate = real_eigenpair_certificate(bounds.lambda_star, gap, anti_norm)
    report.add(
        'certificate',
        certificate.eigenvalue,
        real_eigen_ok=certificate.real_eigen_ok,
        anti_norm=certificate.anti_norm,
        disc_radius=certificate.disc_radius,
        reason=certificate.reason,
    )
    report.status = Status.PASS if certificate.real_eigen_ok else Status.UNKNOWN
    report.wall_time = time.monotonic() - start
    return report
