"""
Directed rounding on top of round-to-nearest binary64.

Python has no access to the FPU rounding mode. Instead every basic operation is computed
round-to-nearest and the exact rounding error is recovered with an error-free transformation.
Its sign tells in which direction the true result lies, so an endpoint is only moved by one ULP
when the float result is inexact in that direction. Exact results stay exact.

Outside the ranges where the transformations are exact (overflow/underflow regions) both
endpoints are moved by one ULP.
"""

import math
from fractions import Fraction

from capverify.errors import DomainViolation


INF = math.inf

_SPLITTER = 134217729.0  # 2**27 + 1
_SPLIT_LIMIT = 2.0**995
_PRODUCT_MIN = 2.0**-900
_PRODUCT_MAX = 2.0**1000

_fma = getattr(math, 'fma', None)  # Python >= 3.13


def down(value: float) -> float:
    return math.nextafter(value, -INF)


def up(value: float) -> float:
    return math.nextafter(value, INF)


def two_sum(a: float, b: float) -> tuple[float, float]:
    """
    s + err == a + b exactly (Knuth), as long as s is finite.

    >>> two_sum(1.0, 2.0**-60)
    (1.0, 8.673617379884035e-19)
    """
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def _split(a: float) -> tuple[float, float]:
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def two_product(a: float, b: float) -> tuple[float, float]:
    """
    p + err == a * b exactly, valid while a*b stays away from overflow and underflow.
    """
    p = a * b
    if _fma is not None:
        return p, _fma(a, b, -p)
    a_hi, a_lo = _split(a)
    b_hi, b_lo = _split(b)
    err = ((a_hi * b_hi - p) + a_hi * b_lo + a_lo * b_hi) + a_lo * b_lo
    return p, err


def _settle(value: float, err: float) -> tuple[float, float]:
    if err > 0:
        return value, up(value)
    if err < 0:
        return down(value), value
    return value, value


def _check_finite(value: float, *operands: float) -> None:
    if not math.isfinite(value) and all(math.isfinite(op) for op in operands):
        raise DomainViolation(f'binary64 overflow for operands {operands}')


def add_bounds(a: float, b: float) -> tuple[float, float]:
    """
    Lower and upper float bound of the exact sum.

    >>> add_bounds(0.1, 0.2)
    (0.3, 0.30000000000000004)
    >>> add_bounds(1.0, 2.0)
    (3.0, 3.0)
    """
    s = a + b
    _check_finite(s, a, b)
    if not math.isfinite(s):
        return s, s
    _, err = two_sum(a, b)
    return _settle(s, err)


def mul_bounds(a: float, b: float) -> tuple[float, float]:
    p = a * b
    _check_finite(p, a, b)
    if p == 0.0:
        if a == 0.0 or b == 0.0:
            return 0.0, 0.0
        # underflow to zero
        tiny = 5e-324
        return (-tiny, 0.0) if (a < 0) != (b < 0) else (0.0, tiny)
    if _PRODUCT_MIN < abs(p) < _PRODUCT_MAX and abs(a) < _SPLIT_LIMIT and abs(b) < _SPLIT_LIMIT:
        _, err = two_product(a, b)
        return _settle(p, err)
    return down(p), up(p)


def div_bounds(a: float, b: float) -> tuple[float, float]:
    assert b != 0.0, 'division by exact zero must be caught by the caller'
    q = a / b
    _check_finite(q, a, b)
    if a == 0.0:
        return 0.0, 0.0
    if q == 0.0:
        tiny = 5e-324
        return (-tiny, 0.0) if (a < 0) != (b < 0) else (0.0, tiny)
    if (
        _PRODUCT_MIN < abs(q) < _SPLIT_LIMIT
        and _PRODUCT_MIN < abs(a) < _PRODUCT_MAX
        and _PRODUCT_MIN < abs(b) < _SPLIT_LIMIT
    ):
        p, e = two_product(q, b)
        residual = (a - p) - e  # a - q*b, sign exact
        # a/b - q == residual / b
        if residual == 0.0:
            return q, q
        if (residual > 0) == (b > 0):
            return q, up(q)
        return down(q), q
    return down(q), up(q)


def sqrt_bounds(a: float) -> tuple[float, float]:
    if a < 0.0:
        raise DomainViolation(f'sqrt of negative value {a!r}')
    if a == 0.0 or a == INF:
        return a, a
    s = math.sqrt(a)
    if _PRODUCT_MIN < a < _PRODUCT_MAX:
        p, e = two_product(s, s)
        excess = (p - a) + e  # s*s - a, sign exact
        if excess == 0.0:
            return s, s
        if excess > 0:
            return down(s), s
        return s, up(s)
    return down(s), up(s)


def float_down(value: Fraction) -> float:
    """
    Largest float <= value.

    >>> float_down(Fraction(1, 10))
    0.09999999999999999
    >>> float_down(Fraction(1, 2))
    0.5
    """
    f = float(value)
    if Fraction(f) > value:
        f = down(f)
    return f


def float_up(value: Fraction) -> float:
    """
    Smallest float >= value.

    >>> float_up(Fraction(1, 10))
    0.1
    """
    f = float(value)
    if Fraction(f) < value:
        f = up(f)
    return f
