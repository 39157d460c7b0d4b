import mpmath

from capverify.expressions import register_expression
from capverify.taylor_ad import TaylorJet, jet_cos, jet_exp, jet_sin


@register_expression('exp', truth=mpmath.exp)
def exp(x: TaylorJet) -> TaylorJet:
    """e^x"""
    return jet_exp(x)


@register_expression('sin', truth=mpmath.sin, periodic=True)
def sin(x: TaylorJet) -> TaylorJet:
    """sin(x)"""
    return jet_sin(x)


@register_expression('cos', truth=mpmath.cos, periodic=True)
def cos(x: TaylorJet) -> TaylorJet:
    """cos(x)"""
    return jet_cos(x)


@register_expression('one', truth=lambda x: mpmath.mpf(1), periodic=True)
def one(x: TaylorJet) -> TaylorJet:
    """1"""
    return x * 0 + 1


@register_expression('gauss', truth=lambda x: mpmath.exp(-x * x))
def gauss(x: TaylorJet) -> TaylorJet:
    """e^(-x^2)"""
    return jet_exp(-(x * x))


@register_expression('exp_sin', truth=lambda x: mpmath.exp(mpmath.sin(x)), periodic=True)
def exp_sin(x: TaylorJet) -> TaylorJet:
    """e^sin(x)"""
    return jet_exp(jet_sin(x))
