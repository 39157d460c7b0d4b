"""
Truncated Taylor series with interval coefficients.

A jet of order N at the base B holds the normalized coefficients f^(k)(x0)/k! for k = 0..N,
enclosed for every x0 in B. Coefficients are intervals or jets again: a jet in y whose
coefficients are jets in x carries all mixed coefficients of a function of (x, y).
"""

import dataclasses
import logging

from capverify.errors import BaseMismatch, DivisionByZeroInterval
from capverify.interval_core import ONE, ZERO, Interval
from capverify.taylor_ad.instrumentation import record_products


logger = logging.getLogger(__name__)

SCALAR_TYPES = (Interval, int, float)


def is_zero(value: 'Interval | TaylorJet') -> bool:
    return isinstance(value, Interval) and value.lo == 0.0 and value.hi == 0.0


@dataclasses.dataclass(frozen=True)
class TaylorJet:
    """
    >>> x = jet_variable(Interval(2, 2), order=2)
    >>> (x * x).coeffs
    (Interval(lo=4.0, hi=4.0), Interval(lo=4.0, hi=4.0), Interval(lo=1.0, hi=1.0))
    """

    base: Interval
    coeffs: tuple['Interval | TaylorJet', ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not coeffs:
            raise ValueError('A jet needs at least one coefficient')
        object.__setattr__(self, 'coeffs', coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def value(self) -> 'Interval | TaylorJet':
        return self.coeffs[0]

    @property
    def is_nested(self) -> bool:
        return any(isinstance(c, TaylorJet) for c in self.coeffs)

    def _peer(self, other: 'TaylorJet') -> 'TaylorJet':
        if other.base != self.base:
            raise BaseMismatch(f'Jet bases differ: {self.base} != {other.base}')
        if other.order != self.order:
            raise BaseMismatch(f'Jet orders differ: {self.order} != {other.order}')
        return other

    def _with(self, coeffs: list) -> 'TaylorJet':
        return TaylorJet(self.base, tuple(coeffs))

    # -----------------------------------------------------------------------------------------

    def __neg__(self) -> 'TaylorJet':
        return self._with([-c for c in self.coeffs])

    def __pos__(self) -> 'TaylorJet':
        return self

    def __add__(self, other):
        if isinstance(other, TaylorJet):
            self._peer(other)
            return self._with([a + b for a, b in zip(self.coeffs, other.coeffs)])
        if isinstance(other, SCALAR_TYPES):
            return self._with([self.coeffs[0] + other, *self.coeffs[1:]])
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, TaylorJet):
            self._peer(other)
            return self._with([a - b for a, b in zip(self.coeffs, other.coeffs)])
        if isinstance(other, SCALAR_TYPES):
            return self._with([self.coeffs[0] - other, *self.coeffs[1:]])
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, SCALAR_TYPES):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, TaylorJet):
            self._peer(other)
            return self._with(cauchy_product(self.coeffs, other.coeffs))
        if isinstance(other, SCALAR_TYPES):
            record_products(len(self.coeffs))
            return self._with([c * other for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TaylorJet):
            self._peer(other)
            return self._with(quotient_series(self.coeffs, other.coeffs))
        if isinstance(other, SCALAR_TYPES):
            if isinstance(other, Interval) and other.contains_zero() or other == 0:
                raise DivisionByZeroInterval(f'Jet division by {other}')
            return self._with([c / other for c in self.coeffs])
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, SCALAR_TYPES):
            return jet_constant(other, self.order, base=self.base) / self
        return NotImplemented

    def __pow__(self, k: int) -> 'TaylorJet':
        from capverify.taylor_ad.functions import jet_pow_int

        return jet_pow_int(self, k)

    def derivative_value(self, k: int) -> 'Interval | TaylorJet':
        """k-th derivative at the base: k! times the k-th coefficient."""
        factor = 1
        for i in range(2, k + 1):
            factor *= i
        return self.coeffs[k] * factor


def _fold(terms: list):
    if not terms:
        return ZERO
    total = terms[0]
    for term in terms[1:]:
        total = total + term
    return total


def cauchy_product(u: tuple, v: tuple) -> list:
    size = len(u)
    result = []
    products = 0
    for k in range(size):
        terms = []
        for j in range(k + 1):
            a = u[j]
            b = v[k - j]
            if is_zero(a) or is_zero(b):
                continue
            terms.append(a * b)
            products += 1
        result.append(_fold(terms))
    record_products(products)
    return result


def quotient_series(u: tuple, v: tuple) -> list:
    v0 = v[0]
    if isinstance(v0, Interval) and v0.contains_zero():
        raise DivisionByZeroInterval(f'Jet division by a series with leading coefficient {v0}')
    quotient = []
    products = 0
    for k in range(len(u)):
        acc = u[k]
        for j in range(1, k + 1):
            if is_zero(v[j]) or is_zero(quotient[k - j]):
                continue
            acc = acc - v[j] * quotient[k - j]
            products += 1
        quotient.append(acc / v0)
    record_products(products + len(u))
    return quotient


# ---------------------------------------------------------------------------------------------
# seeds


def jet_constant(value: 'Interval | TaylorJet | int | float', order: int, base: Interval | None = None) -> TaylorJet:
    if isinstance(value, (int, float)):
        value = Interval.point(value)
    if base is None:
        if not isinstance(value, Interval):
            raise ValueError('A constant with jet value needs an explicit base')
        base = value
    return TaylorJet(base, (value,) + (ZERO,) * order)


def jet_variable(value: Interval | int | float, order: int) -> TaylorJet:
    value = Interval.point(value)
    if order == 0:
        return TaylorJet(value, (value,))
    return TaylorJet(value, (value, ONE) + (ZERO,) * (order - 1))


def jet_seed(kind: str, value: Interval | int | float, order: int, base: Interval | None = None) -> TaylorJet:
    """
    >>> jet_seed('variable', 3, 2).coeffs
    (Interval(lo=3.0, hi=3.0), Interval(lo=1.0, hi=1.0), Interval(lo=0.0, hi=0.0))
    """
    if order < 0:
        raise ValueError(f'Jet order must be >= 0, got {order}')
    if kind == 'constant':
        return jet_constant(value, order, base=base)
    if kind == 'variable':
        jet = jet_variable(value, order)
        if base is not None and base != jet.base:
            raise BaseMismatch(f'Variable seed must use its value as base: {base} != {jet.base}')
        return jet
    raise ValueError(f'Unknown seed kind {kind!r}')


def bivariate_seeds(
    x_base: Interval | int | float, x_order: int, y_base: Interval | int | float, y_order: int
) -> tuple[TaylorJet, TaylorJet]:
    """
    Seeds of a nested jet: outer variable y, coefficients are jets in x.
    """
    y_base = Interval.point(y_base)
    inner_x = jet_variable(x_base, x_order)
    return jet_constant(inner_x, y_order, base=y_base), jet_variable(y_base, y_order)


def as_jet(value: 'TaylorJet | Interval | int | float', like: TaylorJet) -> TaylorJet:
    """Promote constant results of jet functions (e.g. `lambda x: 1`) to jets."""
    if isinstance(value, TaylorJet):
        return value
    return jet_constant(value, like.order, base=like.base)


def inner_coefficients(value: 'Interval | TaylorJet', order: int) -> tuple[Interval, ...]:
    """Coefficients of a nested jet entry, constants padded with zeros."""
    if isinstance(value, TaylorJet):
        return value.coeffs
    return (value,) + (ZERO,) * order


def jet_arith(op: str, u: TaylorJet, v: 'TaylorJet | Interval | int | float') -> TaylorJet:
    if op == 'add':
        return u + v
    if op == 'sub':
        return u - v
    if op == 'mul':
        return u * v
    if op == 'div':
        return u / v
    raise ValueError(f'Unknown jet operation {op!r}')


def jet_derivative(u: TaylorJet) -> TaylorJet:
    """
    >>> jet_derivative(jet_variable(2, 3) ** 3).coeffs
    (Interval(lo=12.0, hi=12.0), Interval(lo=12.0, hi=12.0), Interval(lo=3.0, hi=3.0))
    """
    if u.order == 0:
        raise ValueError('Derivative of an order 0 jet has no coefficients')
    return TaylorJet(u.base, tuple(u.coeffs[k] * k for k in range(1, u.order + 1)))
