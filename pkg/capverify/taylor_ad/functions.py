"""
Elementary functions of jets via the classical coefficient recurrences.

The zeroth coefficient is evaluated by the interval (or, for nested jets, the jet) version of
the function, all higher coefficients follow from convolution sums, so an order N jet costs
O(N**2) coefficient products.
"""

import logging
from math import factorial

from capverify.errors import DomainViolation
from capverify.interval_core import ONE, ZERO, Interval, cosh, exp, sinh, sqrt
from capverify.interval_core.elementary import TRIG_TERMS, cos, sin, sin_cos_point
from capverify.taylor_ad.instrumentation import record_products
from capverify.taylor_ad.jet import TaylorJet, _fold, is_zero, jet_constant


logger = logging.getLogger(__name__)


def _exp_value(c: Interval | TaylorJet) -> Interval | TaylorJet:
    if isinstance(c, Interval):
        return exp(c)
    return jet_exp(c)


def _sin_cos_value(c: Interval | TaylorJet) -> tuple[Interval | TaylorJet, Interval | TaylorJet]:
    if isinstance(c, Interval):
        if c.is_thin:
            return sin_cos_point(c.lo)
        return sin(c), cos(c)
    return jet_sin_cos(c)


def _sinh_cosh_value(c: Interval | TaylorJet) -> tuple[Interval | TaylorJet, Interval | TaylorJet]:
    if isinstance(c, Interval):
        return sinh(c), cosh(c)
    return jet_sinh_cosh(c)


def _sqrt_value(c: Interval | TaylorJet) -> Interval | TaylorJet:
    if isinstance(c, Interval):
        return sqrt(c)
    return jet_sqrt(c)


def jet_exp(u: TaylorJet) -> TaylorJet:
    """
    e_k = (1/k) * sum_{j=1..k} j * u_j * e_{k-j}

    >>> from capverify.taylor_ad.jet import jet_variable
    >>> [c.contains(v) for c, v in zip(jet_exp(jet_variable(0, 2)).coeffs, (1, 1, 0.5))]
    [True, True, True]
    """
    c = u.coeffs
    e = [_exp_value(c[0])]
    products = 0
    for k in range(1, len(c)):
        terms = []
        for j in range(1, k + 1):
            if is_zero(c[j]):
                continue
            terms.append(c[j] * j * e[k - j])
            products += 1
        e.append(_fold(terms) / k)
    record_products(products)
    return TaylorJet(u.base, tuple(e))


def _coupled(u: TaylorJet, first, second, sign: int) -> tuple[TaylorJet, TaylorJet]:
    """
    Shared recurrence of (sin, cos) with sign -1 and (sinh, cosh) with sign +1:
    a_k = (1/k) sum (j+1) u_{j+1} b_{k-1-j},  b_k = sign * (1/k) sum (j+1) u_{j+1} a_{k-1-j}
    """
    c = u.coeffs
    a = [first]
    b = [second]
    products = 0
    for k in range(1, len(c)):
        a_terms = []
        b_terms = []
        for j in range(k):
            du = c[j + 1]
            if is_zero(du):
                continue
            scaled = du * (j + 1)
            a_terms.append(scaled * b[k - 1 - j])
            b_terms.append(scaled * a[k - 1 - j])
            products += 2
        a.append(_fold(a_terms) / k)
        b_k = _fold(b_terms) / k
        b.append(-b_k if sign < 0 else b_k)
    record_products(products)
    return TaylorJet(u.base, tuple(a)), TaylorJet(u.base, tuple(b))


def jet_sin_cos(u: TaylorJet) -> tuple[TaylorJet, TaylorJet]:
    s0, c0 = _sin_cos_value(u.coeffs[0])
    return _coupled(u, s0, c0, sign=-1)


def jet_sinh_cosh(u: TaylorJet) -> tuple[TaylorJet, TaylorJet]:
    s0, c0 = _sinh_cosh_value(u.coeffs[0])
    return _coupled(u, s0, c0, sign=+1)


def jet_sin(u: TaylorJet) -> TaylorJet:
    return jet_sin_cos(u)[0]


def jet_cos(u: TaylorJet) -> TaylorJet:
    return jet_sin_cos(u)[1]


def jet_tan(u: TaylorJet) -> TaylorJet:
    """
    >>> from capverify.taylor_ad.jet import jet_variable
    >>> [c.contains(v) for c, v in zip(jet_tan(jet_variable(0, 3)).coeffs, (0, 1, 0, 1/3))]
    [True, True, True, True]
    """
    s, c = jet_sin_cos(u)
    return s / c


def jet_cot(u: TaylorJet) -> TaylorJet:
    s, c = jet_sin_cos(u)
    return c / s


def jet_sinh(u: TaylorJet) -> TaylorJet:
    return jet_sinh_cosh(u)[0]


def jet_cosh(u: TaylorJet) -> TaylorJet:
    return jet_sinh_cosh(u)[1]


def jet_sqrt(u: TaylorJet) -> TaylorJet:
    """
    w_k = (u_k - sum_{j=1..k-1} w_j w_{k-j}) / (2 w_0)
    """
    c = u.coeffs
    w0 = _sqrt_value(c[0])
    if len(c) > 1 and isinstance(w0, Interval) and w0.contains_zero():
        raise DomainViolation(f'sqrt jet needs a positive base value, got {c[0]}')
    w = [w0]
    twice = w0 * 2
    products = 0
    for k in range(1, len(c)):
        acc = c[k]
        for j in range(1, k):
            if is_zero(w[j]) or is_zero(w[k - j]):
                continue
            acc = acc - w[j] * w[k - j]
            products += 1
        w.append(acc / twice)
    record_products(products)
    return TaylorJet(u.base, tuple(w))


def jet_pow_int(u: TaylorJet, k: int) -> TaylorJet:
    if k < 0:
        return 1 / jet_pow_int(u, -k)
    result = jet_constant(ONE, u.order, base=u.base)
    square = u
    while k:
        if k & 1:
            result = result * square
        k >>= 1
        if k:
            square = square * square
    return result


def compose_with_coefficients(outer: list[Interval], u: TaylorJet) -> TaylorJet:
    """
    Jet of g(u) from enclosures outer[n] of g^(n)(u0)/n!, valid for every u0 in the range
    of the base coefficient of u.
    """
    order = u.order
    if len(outer) < order + 1:
        raise ValueError(f'Need {order + 1} outer coefficients, got {len(outer)}')
    shift = TaylorJet(u.base, (ZERO,) + u.coeffs[1:])
    power = jet_constant(ONE, order, base=u.base)
    result = [ZERO] * (order + 1)
    for n in range(order + 1):
        for k in range(n, order + 1):
            term = power.coeffs[k]
            if not is_zero(term):
                result[k] = result[k] + outer[n] * term
        if n < order:
            power = power * shift
    return TaylorJet(u.base, tuple(result))


def _sinhc_tail_bound(terms: int) -> Interval:
    """
    Every normalized derivative of sum_{j>terms} t**(2j)/(2j+1)! on |t| <= 1 is bounded by
    twice the first 4**j/(2j+1)! term.
    """
    bound = Interval.point(4) ** (terms + 1) * 2 / factorial(2 * terms + 3)
    return Interval(-bound.hi, bound.hi)


def jet_sinhc(u: TaylorJet) -> TaylorJet:
    """
    Jet of sinh(u)/u, analytic through u = 0 (value 1 there).

    >>> from capverify.taylor_ad.jet import jet_variable
    >>> jet_sinhc(jet_variable(0, 2)).coeffs[0].contains(1)
    True
    """
    u0 = u.coeffs[0]
    if not isinstance(u0, Interval):
        raise NotImplementedError('sinhc is only implemented for jets with interval coefficients')
    if u0.mignitude() >= 0.5:
        return jet_sinh(u) / u
    if u0.magnitude() <= 1.0:
        square = u * u
        total = jet_constant(ONE, u.order, base=u.base)
        for j in range(TRIG_TERMS, 0, -1):
            total = (square * total) / ((2 * j) * (2 * j + 1)) + ONE
        tail = compose_with_coefficients([_sinhc_tail_bound(TRIG_TERMS)] * (u.order + 1), u)
        return total + tail
    # wide base around zero: sinh(t)/t = integral_0^1 cosh(s*t) ds
    reach = u0.hull(ZERO)
    sinh_range, cosh_range = sinh(reach), cosh(reach)
    outer = [(cosh_range if n % 2 == 0 else sinh_range) / factorial(n + 1) for n in range(u.order + 1)]
    return compose_with_coefficients(outer, u)


JET_FUNCTIONS = {
    'exp': jet_exp,
    'sin_cos': jet_sin_cos,
    'sinh_cosh': jet_sinh_cosh,
    'sqrt': jet_sqrt,
    'sin': jet_sin,
    'cos': jet_cos,
    'tan': jet_tan,
    'cot': jet_cot,
    'sinh': jet_sinh,
    'cosh': jet_cosh,
    'sinhc': jet_sinhc,
}


def jet_elementary(fn: str, u: TaylorJet, k: int | None = None):
    if fn == 'pow_int':
        if k is None:
            raise ValueError('pow_int needs the exponent k')
        return jet_pow_int(u, k)
    try:
        func = JET_FUNCTIONS[fn]
    except KeyError:
        raise ValueError(f'Unknown jet function {fn!r}') from None
    return func(u)
