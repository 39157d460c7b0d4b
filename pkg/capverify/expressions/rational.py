import mpmath

from capverify.expressions import register_expression
from capverify.taylor_ad import TaylorJet, jet_cos


@register_expression('inv1p', truth=lambda x: 1 / (1 + x))
def inv1p(x: TaylorJet) -> TaylorJet:
    """1/(1+x)"""
    return 1 / (1 + x)


@register_expression('runge', truth=lambda x: 1 / (1 + 25 * x * x))
def runge(x: TaylorJet) -> TaylorJet:
    """1/(1+25x^2)"""
    return 1 / (1 + 25 * (x * x))


@register_expression('cos_ratio', truth=lambda x: 1 / (2 + mpmath.cos(x)), periodic=True)
def cos_ratio(x: TaylorJet) -> TaylorJet:
    """1/(2+cos(x))"""
    return 1 / (2 + jet_cos(x))
