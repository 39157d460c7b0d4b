"""
Elementary functions with rigorous enclosures.

Nothing here trusts libm: every function reduces its argument with interval constants and
sums a short Taylor series in interval arithmetic plus an explicit bound of the truncated tail.
Interval arguments are handled through monotonicity or by sweeping interior extrema.
"""

import logging
import math
import operator
from collections.abc import Callable
from math import factorial

from capverify.errors import DomainViolation
from capverify.interval_core.consts import HALF_PI, LN2, PI, TWO_PI
from capverify.interval_core.interval import ONE, ZERO, Interval, _coerce, _require_bounded
from capverify.interval_core.rounding import mul_bounds, sqrt_bounds


logger = logging.getLogger(__name__)

UNIT = Interval(-1.0, 1.0)

EXP_TERMS = 18
TRIG_TERMS = 12
ATAN_TERMS = 12
LOG_TERMS = 12

_EXP_MAX = 709.7  # below log(DBL_MAX) = 709.78...
_EXP_MIN = -700.0
_TRIG_MAX = 1e8
_LN2_FLOAT = 0.6931471805599453
_SQRT_HALF = 0.7071067811865476


def _symmetric_tail(magnitude: float, power: int, denominator: int, factor: int = 1) -> Interval:
    bound = pow_int(Interval.point(magnitude), power) * factor / denominator
    return Interval(-bound.hi, bound.hi)


def _clip_unit(value: Interval) -> Interval:
    return value.intersect(UNIT) or value


def _may_contain(x: Interval, offset: Interval, period: Interval) -> bool:
    """Is some offset + n*period (n integer) possibly inside x?"""
    n_lo = math.floor((x.lo - offset.hi) / period.lo) - 1
    n_hi = math.ceil((x.hi - offset.lo) / period.lo) + 1
    for n in range(n_lo, n_hi + 1):
        candidate = offset + period * n
        if candidate.hi >= x.lo and candidate.lo <= x.hi:
            return True
    return False


# ---------------------------------------------------------------------------------------------
# powers and roots


def _pow_up(a: float, k: int) -> float:
    result = a
    for _ in range(k - 1):
        result = mul_bounds(result, a)[1]
    return result


def _pow_down(a: float, k: int) -> float:
    result = a
    for _ in range(k - 1):
        result = mul_bounds(result, a)[0]
    return result


def sqr(x: Interval | float) -> Interval:
    """
    Tight image of x**2

    >>> sqr(Interval(-1, 2))
    Interval(lo=0.0, hi=4.0)
    """
    x = _coerce(x)
    _require_bounded(x)
    if x.contains_zero():
        return Interval(0.0, max(mul_bounds(x.lo, x.lo)[1], mul_bounds(x.hi, x.hi)[1]))
    small, large = x.mignitude(), x.magnitude()
    return Interval(mul_bounds(small, small)[0], mul_bounds(large, large)[1])


def pow_int(x: Interval | float, k: int) -> Interval:
    x = _coerce(x)
    if k == 0:
        return ONE
    if k < 0:
        return ONE / pow_int(x, -k)
    if k == 1:
        return x
    _require_bounded(x)
    if k % 2 == 0:
        if x.contains_zero():
            return Interval(0.0, max(_pow_up(abs(x.lo), k), _pow_up(abs(x.hi), k)))
        return Interval(_pow_down(x.mignitude(), k), _pow_up(x.magnitude(), k))
    lo = _pow_down(x.lo, k) if x.lo >= 0 else -_pow_up(-x.lo, k)
    hi = _pow_up(x.hi, k) if x.hi >= 0 else -_pow_down(-x.hi, k)
    return Interval(lo, hi)


def sqrt(x: Interval | float) -> Interval:
    x = _coerce(x)
    if x.lo < 0.0:
        raise DomainViolation(f'sqrt of negative-reaching {x}')
    return Interval(sqrt_bounds(x.lo)[0], sqrt_bounds(x.hi)[1])


# ---------------------------------------------------------------------------------------------
# exp / log


def _exp_core(r: Interval) -> Interval:
    # |r| <= ln(2)/2, so exp(|r|) < 2 bounds the Lagrange factor
    total = ONE
    for n in range(EXP_TERMS, 0, -1):
        total = ONE + r * total / n
    return total + _symmetric_tail(r.magnitude(), EXP_TERMS + 1, factorial(EXP_TERMS + 1), factor=2)


def _exp_point(x: float) -> Interval:
    if x == 0.0:
        return ONE
    if x > _EXP_MAX:
        raise DomainViolation(f'exp({x!r}) overflows binary64')
    if x < _EXP_MIN:
        return Interval(0.0, 1e-300)
    k = round(x / _LN2_FLOAT)
    r = Interval.point(x) - LN2 * k
    return _exp_core(r).scale2(k)


def exp(x: Interval | float) -> Interval:
    """
    >>> exp(0)
    Interval(lo=1.0, hi=1.0)
    """
    x = _coerce(x)
    if x.hi == math.inf:
        raise DomainViolation(f'exp of unbounded {x}')
    lo = 0.0 if x.lo == -math.inf else _exp_point(x.lo).lo
    return Interval(max(lo, 0.0), _exp_point(x.hi).hi)


def _log_point(x: float) -> Interval:
    if x <= 0.0:
        raise DomainViolation(f'log of non-positive {x!r}')
    if x == 1.0:
        return ZERO
    m, e = math.frexp(x)
    if m < _SQRT_HALF:
        m *= 2.0
        e -= 1
    # log(m) = 2*atanh(t), |t| < 0.172
    t = Interval.point(m - 1.0) / (Interval.point(m) + 1.0)
    s = sqr(t)
    total = ONE / (2 * LOG_TERMS + 1)
    for j in range(LOG_TERMS - 1, -1, -1):
        total = ONE / (2 * j + 1) + s * total
    t_mag = Interval.point(t.magnitude())
    tail = pow_int(t_mag, 2 * LOG_TERMS + 2) / ((ONE - sqr(t_mag)) * (2 * LOG_TERMS + 3))
    atanh = t * (total + Interval(0.0, tail.hi))
    return LN2 * e + atanh * 2


def log(x: Interval | float) -> Interval:
    x = _coerce(x)
    if x.lo <= 0.0:
        raise DomainViolation(f'log of non-positive-reaching {x}')
    if x.hi == math.inf:
        raise DomainViolation(f'log of unbounded {x}')
    return Interval(_log_point(x.lo).lo, _log_point(x.hi).hi)


# ---------------------------------------------------------------------------------------------
# trigonometric


def _sin_cos_core(r: Interval) -> tuple[Interval, Interval]:
    s = sqr(r)
    sin_total = ONE
    cos_total = ONE
    for j in range(TRIG_TERMS, 0, -1):
        sin_total = ONE - s * sin_total / ((2 * j) * (2 * j + 1))
        cos_total = ONE - s * cos_total / ((2 * j - 1) * (2 * j))
    mag = r.magnitude()
    sin_r = r * sin_total + _symmetric_tail(mag, 2 * TRIG_TERMS + 3, factorial(2 * TRIG_TERMS + 3))
    cos_r = cos_total + _symmetric_tail(mag, 2 * TRIG_TERMS + 2, factorial(2 * TRIG_TERMS + 2))
    return sin_r, cos_r


def sin_cos_point(x: float) -> tuple[Interval, Interval]:
    if abs(x) > _TRIG_MAX:
        return UNIT, UNIT
    k = round(x / (math.pi / 2))
    r = Interval.point(x) - HALF_PI * k
    sin_r, cos_r = _sin_cos_core(r)
    quadrant = k % 4
    if quadrant == 0:
        s, c = sin_r, cos_r
    elif quadrant == 1:
        s, c = cos_r, -sin_r
    elif quadrant == 2:
        s, c = -sin_r, -cos_r
    else:
        s, c = -cos_r, sin_r
    return _clip_unit(s), _clip_unit(c)


def _periodic(x: Interval, index: int, max_offset: Interval, min_offset: Interval) -> Interval:
    _require_bounded(x)
    if x.is_thin:
        return sin_cos_point(x.lo)[index]
    if x.hi - x.lo >= 6.3 or x.magnitude() > _TRIG_MAX:
        return UNIT
    result = sin_cos_point(x.lo)[index].hull(sin_cos_point(x.hi)[index])
    if _may_contain(x, max_offset, TWO_PI):
        result = result.hull(ONE)
    if _may_contain(x, min_offset, TWO_PI):
        result = result.hull(-ONE)
    return _clip_unit(result)


def sin(x: Interval | float) -> Interval:
    """
    >>> sin(Interval(0, 0))
    Interval(lo=0.0, hi=0.0)
    """
    return _periodic(_coerce(x), 0, max_offset=HALF_PI, min_offset=-HALF_PI)


def cos(x: Interval | float) -> Interval:
    """
    >>> cos(Interval(0, 3.141592653589793))
    Interval(lo=-1.0, hi=1.0)
    """
    return _periodic(_coerce(x), 1, max_offset=ZERO, min_offset=PI)


def _tan_point(x: float) -> Interval:
    s, c = sin_cos_point(x)
    if c.contains_zero():
        raise DomainViolation(f'tan pole near {x!r}')
    return s / c


def _cot_point(x: float) -> Interval:
    s, c = sin_cos_point(x)
    if s.contains_zero():
        raise DomainViolation(f'cot pole near {x!r}')
    return c / s


def tan(x: Interval | float) -> Interval:
    x = _coerce(x)
    _require_bounded(x)
    if x.is_thin:
        return _tan_point(x.lo)
    if _may_contain(x, HALF_PI, PI):
        raise DomainViolation(f'tan pole inside {x}')
    return Interval(_tan_point(x.lo).lo, _tan_point(x.hi).hi)


def cot(x: Interval | float) -> Interval:
    x = _coerce(x)
    _require_bounded(x)
    if x.is_thin:
        return _cot_point(x.lo)
    if _may_contain(x, ZERO, PI):
        raise DomainViolation(f'cot pole inside {x}')
    return Interval(_cot_point(x.hi).lo, _cot_point(x.lo).hi)


def _atan_reduced(t: Interval) -> Interval:
    # two argument halvings: atan(t) = 2*atan(t / (1 + sqrt(1 + t**2)))
    for _ in range(2):
        t = t / (ONE + sqrt(ONE + sqr(t)))
    s = sqr(t)
    total = ONE / (2 * ATAN_TERMS + 1)
    for j in range(ATAN_TERMS - 1, -1, -1):
        total = ONE / (2 * j + 1) - s * total
    series = t * total + _symmetric_tail(t.magnitude(), 2 * ATAN_TERMS + 3, 2 * ATAN_TERMS + 3)
    return series * 4


def _atan_point(x: float) -> Interval:
    if x == 0.0:
        return ZERO
    if abs(x) > 1.0:
        inner = _atan_reduced(ONE / Interval.point(x))
        return HALF_PI - inner if x > 0 else -HALF_PI - inner
    return _atan_reduced(Interval.point(x))


def atan(x: Interval | float) -> Interval:
    x = _coerce(x)
    _require_bounded(x)
    return Interval(_atan_point(x.lo).lo, _atan_point(x.hi).hi)


# ---------------------------------------------------------------------------------------------
# hyperbolic


def _sinh_point(x: float) -> Interval:
    if abs(x) < 1.0:
        r = Interval.point(x)
        s = sqr(r)
        total = ONE
        for j in range(TRIG_TERMS, 0, -1):
            total = ONE + s * total / ((2 * j) * (2 * j + 1))
        return r * total + _symmetric_tail(abs(x), 2 * TRIG_TERMS + 3, factorial(2 * TRIG_TERMS + 3), factor=2)
    # odd in x, exp(|x|) raises on overflow
    e = _exp_point(abs(x))
    value = (e - ONE / e) / 2
    return value if x > 0 else -value


def _cosh_point(x: float) -> Interval:
    e = _exp_point(abs(x))
    value = (e + ONE / e) / 2
    return Interval(max(value.lo, 1.0), value.hi)


def sinh(x: Interval | float) -> Interval:
    x = _coerce(x)
    _require_bounded(x)
    return Interval(_sinh_point(x.lo).lo, _sinh_point(x.hi).hi)


def cosh(x: Interval | float) -> Interval:
    x = _coerce(x)
    _require_bounded(x)
    if x.contains_zero():
        return Interval(1.0, max(_cosh_point(x.lo).hi, _cosh_point(x.hi).hi))
    return Interval(_cosh_point(x.mignitude()).lo, _cosh_point(x.magnitude()).hi)


# ---------------------------------------------------------------------------------------------
# dispatch

BINARY_OPS: dict[str, Callable] = {
    'add': operator.add,
    'sub': operator.sub,
    'mul': operator.mul,
    'div': operator.truediv,
}

ELEMENTARY_FUNCTIONS: dict[str, Callable] = {
    'sqr': sqr,
    'sqrt': sqrt,
    'exp': exp,
    'log': log,
    'sin': sin,
    'cos': cos,
    'tan': tan,
    'cot': cot,
    'sinh': sinh,
    'cosh': cosh,
    'atan': atan,
}


def binary_op(op: str, x: Interval | float, y: Interval | float) -> Interval:
    """
    >>> binary_op('mul', Interval(3, 4), Interval(1, 2))
    Interval(lo=3.0, hi=8.0)
    """
    try:
        func = BINARY_OPS[op]
    except KeyError:
        raise ValueError(f'Unknown interval operation {op!r}') from None
    return func(_coerce(x), _coerce(y))


def elementary(fn: str, x: Interval | float, k: int | None = None) -> Interval:
    if fn == 'pow_int':
        if k is None:
            raise ValueError('pow_int needs the exponent k')
        return pow_int(x, k)
    try:
        func = ELEMENTARY_FUNCTIONS[fn]
    except KeyError:
        raise ValueError(f'Unknown elementary function {fn!r}') from None
    return func(x)
