"""
    Rigorous quadrature of jet-evaluable integrands.
"""

from capverify.quad_rigor.adaptive import integrate_adaptive
from capverify.quad_rigor.enclosure import DecayBound, Enclosure, sum_enclosures
from capverify.quad_rigor.halfline import integrate_halfline
from capverify.quad_rigor.integrands import (
    BivariateJetFunction,
    JetPiece,
    PiecewiseJetFunction,
    value_enclosure,
)
from capverify.quad_rigor.moments import coefficient_moment, power_moment
from capverify.quad_rigor.schemes import integrate_scheme
from capverify.quad_rigor.taylor import integrate_taylor
from capverify.quad_rigor.transforms import change_of_variables_halfcircle
from capverify.quad_rigor.two_d import integrate_2d


__all__ = [
    'BivariateJetFunction',
    'DecayBound',
    'Enclosure',
    'JetPiece',
    'PiecewiseJetFunction',
    'change_of_variables_halfcircle',
    'coefficient_moment',
    'integrate_2d',
    'integrate_adaptive',
    'integrate_halfline',
    'integrate_scheme',
    'integrate_taylor',
    'power_moment',
    'sum_enclosures',
    'value_enclosure',
]
