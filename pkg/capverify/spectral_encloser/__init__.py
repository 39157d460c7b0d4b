"""
    Interval enclosure of a finite rank surrogate of the linearized V-state operator and
    its real eigenpair certificate.
"""

from capverify.spectral_encloser.certificate import (
    EigenCertificate,
    SpectrumBounds,
    real_eigenpair_certificate,
    symmetric_spectrum_bounds,
    symmetric_split,
)
from capverify.spectral_encloser.discretize import ConstantKernel, OperatorEnclosure, discretize
from capverify.spectral_encloser.kernels import angular_integral, kernel_I, kernel_T3, multiplier_range
from capverify.spectral_encloser.linalg import IntervalMatrix, ldl_inertia
from capverify.spectral_encloser.profile import AnnularProfile, build_profile, flat_profile, seam_continuity
from capverify.spectral_encloser.verify import verify_spectral


__all__ = [
    'AnnularProfile',
    'ConstantKernel',
    'EigenCertificate',
    'IntervalMatrix',
    'OperatorEnclosure',
    'SpectrumBounds',
    'angular_integral',
    'build_profile',
    'discretize',
    'flat_profile',
    'kernel_I',
    'kernel_T3',
    'ldl_inertia',
    'multiplier_range',
    'real_eigenpair_certificate',
    'seam_continuity',
    'symmetric_spectrum_bounds',
    'symmetric_split',
    'verify_spectral',
]
