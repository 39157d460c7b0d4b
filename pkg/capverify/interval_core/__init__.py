"""
    Directed rounding interval arithmetic over binary64.
"""

from capverify.interval_core.consts import HALF_PI, LN2, PI, TWO_PI
from capverify.interval_core.elementary import (
    atan,
    binary_op,
    cos,
    cosh,
    cot,
    elementary,
    exp,
    log,
    pow_int,
    sin,
    sinh,
    sqr,
    sqrt,
    tan,
)
from capverify.interval_core.formatting import format_compressed, parse_compressed
from capverify.interval_core.interval import ONE, ZERO, Interval, as_interval
from capverify.interval_core.vector import IntervalVec


__all__ = [
    'HALF_PI',
    'LN2',
    'ONE',
    'PI',
    'TWO_PI',
    'ZERO',
    'Interval',
    'IntervalVec',
    'as_interval',
    'atan',
    'binary_op',
    'cos',
    'cosh',
    'cot',
    'elementary',
    'exp',
    'format_compressed',
    'log',
    'parse_compressed',
    'pow_int',
    'sin',
    'sinh',
    'sqr',
    'sqrt',
    'tan',
]
