"""
    Interval Taylor jets: normalized Taylor coefficients by automatic differentiation.
"""

from capverify.taylor_ad.functions import (
    jet_cos,
    jet_cosh,
    jet_cot,
    jet_elementary,
    jet_exp,
    jet_pow_int,
    jet_sin,
    jet_sin_cos,
    jet_sinh,
    jet_sinh_cosh,
    jet_sinhc,
    jet_sqrt,
    jet_tan,
)
from capverify.taylor_ad.instrumentation import count_coefficient_products
from capverify.taylor_ad.jet import (
    TaylorJet,
    as_jet,
    bivariate_seeds,
    jet_arith,
    jet_constant,
    jet_derivative,
    jet_seed,
    jet_variable,
)
from capverify.taylor_ad.remainder import JetFunction, TaylorExpansion, evaluate_jet, jet_eval_remainder


__all__ = [
    'JetFunction',
    'TaylorExpansion',
    'TaylorJet',
    'as_jet',
    'bivariate_seeds',
    'count_coefficient_products',
    'evaluate_jet',
    'jet_arith',
    'jet_constant',
    'jet_cos',
    'jet_cosh',
    'jet_cot',
    'jet_derivative',
    'jet_elementary',
    'jet_eval_remainder',
    'jet_exp',
    'jet_pow_int',
    'jet_seed',
    'jet_sin',
    'jet_sin_cos',
    'jet_sinh',
    'jet_sinh_cosh',
    'jet_sinhc',
    'jet_sqrt',
    'jet_tan',
    'jet_variable',
]
