"""
    Principal value integrals and removable singularities.
"""

from capverify.singular_quad.cancel import CancelledRatio, cancel_expand
from capverify.singular_quad.hilbert import (
    central_integrand,
    hilbert_transform,
    pv_central,
    pv_far,
    pv_near,
)
from capverify.singular_quad.split import SplitSpec


__all__ = [
    'CancelledRatio',
    'SplitSpec',
    'cancel_expand',
    'central_integrand',
    'hilbert_transform',
    'pv_central',
    'pv_far',
    'pv_near',
]
