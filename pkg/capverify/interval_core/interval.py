import dataclasses
import logging
import math
from collections.abc import Iterable
from fractions import Fraction

from capverify.errors import DivisionByZeroInterval, DomainViolation, InvalidInterval
from capverify.interval_core.rounding import add_bounds, div_bounds, float_down, float_up, mul_bounds


logger = logging.getLogger(__name__)

_EXACT_INT_LIMIT = 2**53


@dataclasses.dataclass(frozen=True, slots=True)
class Interval:
    """
    Closed interval [lo, hi] of binary64 numbers with outward rounded arithmetic.

    >>> Interval(3, 4) * (Interval(1, 2) + Interval(-1, 1))
    Interval(lo=0.0, hi=12.0)
    >>> Interval(3, 4) * Interval(1, 2) + Interval(3, 4) * Interval(-1, 1)
    Interval(lo=-1.0, hi=12.0)
    >>> Interval(0.1, 0.1) + 0.2
    Interval(lo=0.3, hi=0.30000000000000004)
    """

    lo: float
    hi: float

    def __post_init__(self):
        lo = float(self.lo) + 0.0  # no negative zero
        hi = float(self.hi) + 0.0
        if math.isnan(lo) or math.isnan(hi):
            raise InvalidInterval(f'NaN endpoint in [{self.lo}, {self.hi}]')
        if lo > hi:
            raise InvalidInterval(f'Lower bound {lo!r} > upper bound {hi!r}')
        object.__setattr__(self, 'lo', lo)
        object.__setattr__(self, 'hi', hi)

    # -----------------------------------------------------------------------------------------
    # construction

    @classmethod
    def point(cls, value: 'int | float | Interval') -> 'Interval':
        if isinstance(value, Interval):
            return value
        if isinstance(value, int) and abs(value) > _EXACT_INT_LIMIT:
            return cls.from_rational(Fraction(value))
        return cls(value, value)

    @classmethod
    def from_rational(cls, lo: Fraction, hi: Fraction | None = None) -> 'Interval':
        """
        Tightest float interval around the rational range [lo, hi].

        >>> Interval.from_rational(Fraction(1, 3))
        Interval(lo=0.3333333333333333, hi=0.33333333333333337)
        """
        if hi is None:
            hi = lo
        return cls(float_down(Fraction(lo)), float_up(Fraction(hi)))

    @classmethod
    def from_decimal(cls, text: str) -> 'Interval':
        """
        Enclosure of a decimal number given as text.

        >>> Interval.from_decimal('0.1')
        Interval(lo=0.09999999999999999, hi=0.1)
        >>> Interval.from_decimal('0.5')
        Interval(lo=0.5, hi=0.5)
        """
        return cls.from_decimal_bounds(text, text)

    @classmethod
    def from_decimal_bounds(cls, lo_text: str, hi_text: str) -> 'Interval':
        return cls(_parse_endpoint(lo_text, outward=-1), _parse_endpoint(hi_text, outward=+1))

    @classmethod
    def parse(cls, text: str, outward: bool = True) -> 'Interval':
        """
        Parse "[lo,hi]", a compressed "1.7^0833_7994" form or a single number.

        With outward=True the decimals are enclosed; outward=False restores the floats
        written by to_literal() bit exactly.

        >>> Interval.parse('[1, 2.5]')
        Interval(lo=1.0, hi=2.5)
        >>> Interval.parse('123^456_789')
        Interval(lo=123456.0, hi=123789.0)
        """
        text = text.strip()
        if text.startswith('[') and text.endswith(']'):
            parts = text[1:-1].split(',')
            if len(parts) != 2:
                raise InvalidInterval(f'Interval literal needs two endpoints: {text!r}')
            lo_text, hi_text = (part.strip() for part in parts)
        elif '^' in text:
            prefix, _, rest = text.partition('^')
            lo_suffix, sep, hi_suffix = rest.partition('_')
            if not sep:
                raise InvalidInterval(f'Compressed interval without "_": {text!r}')
            lo_text, hi_text = prefix + lo_suffix, prefix + hi_suffix
        else:
            lo_text = hi_text = text
        if outward:
            return cls.from_decimal_bounds(lo_text, hi_text)
        return cls(float(lo_text), float(hi_text))

    @classmethod
    def hull_of(cls, items: Iterable['Interval']) -> 'Interval':
        items = list(items)
        if not items:
            raise InvalidInterval('Hull of no intervals')
        return cls(min(item.lo for item in items), max(item.hi for item in items))

    @classmethod
    def entire(cls) -> 'Interval':
        return cls(-math.inf, math.inf)

    # -----------------------------------------------------------------------------------------
    # queries

    @property
    def is_thin(self) -> bool:
        return self.lo == self.hi

    @property
    def is_bounded(self) -> bool:
        return math.isfinite(self.lo) and math.isfinite(self.hi)

    @property
    def mid(self) -> float:
        """A float inside the interval, close to the center."""
        if self.is_thin:
            return self.lo
        if not self.is_bounded:
            raise DomainViolation(f'No midpoint of unbounded {self}')
        m = 0.5 * self.lo + 0.5 * self.hi
        return min(max(m, self.lo), self.hi)

    def midpoint(self) -> 'Interval':
        return Interval(self.mid, self.mid)

    def width(self) -> 'Interval':
        """Enclosure of hi - lo (thin whenever the difference is exact)."""
        lo, _ = add_bounds(self.hi, -self.lo)
        _, hi = add_bounds(self.hi, -self.lo)
        return Interval(max(lo, 0.0), hi)

    def width_up(self) -> float:
        return self.width().hi

    def magnitude(self) -> float:
        return max(abs(self.lo), abs(self.hi))

    def mignitude(self) -> float:
        if self.lo <= 0.0 <= self.hi:
            return 0.0
        return min(abs(self.lo), abs(self.hi))

    def contains(self, value: 'Interval | int | float') -> bool:
        if isinstance(value, Interval):
            return self.lo <= value.lo and value.hi <= self.hi
        if isinstance(value, int):
            value = Fraction(value)
            return Fraction(self.lo) <= value <= Fraction(self.hi)
        return self.lo <= value <= self.hi

    def __contains__(self, value: 'Interval | int | float') -> bool:
        return self.contains(value)

    def contains_zero(self) -> bool:
        return self.lo <= 0.0 <= self.hi

    def subset(self, other: 'Interval') -> bool:
        return other.contains(self)

    def intersects(self, other: 'Interval') -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def intersect(self, other: 'Interval') -> 'Interval | None':
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            return None
        return Interval(lo, hi)

    def hull(self, other: 'Interval | int | float') -> 'Interval':
        other = _coerce(other)
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def certainly_positive(self) -> bool:
        return self.lo > 0.0

    def certainly_negative(self) -> bool:
        return self.hi < 0.0

    def certainly_lt(self, other: 'Interval | int | float') -> bool:
        return self.hi < _coerce(other).lo

    def certainly_gt(self, other: 'Interval | int | float') -> bool:
        return self.lo > _coerce(other).hi

    def sign(self) -> int:
        """+1 or -1 when the sign is certain, 0 otherwise."""
        if self.lo > 0.0:
            return 1
        if self.hi < 0.0:
            return -1
        return 0

    # -----------------------------------------------------------------------------------------
    # splitting

    def bisect(self) -> tuple['Interval', 'Interval']:
        m = self.mid
        return Interval(self.lo, m), Interval(m, self.hi)

    def subdivide(self, n: int) -> list['Interval']:
        """
        n pieces with shared float endpoints, their union is exactly this interval.

        >>> Interval(0, 1).subdivide(4)
        [Interval(lo=0.0, hi=0.25), Interval(lo=0.25, hi=0.5), Interval(lo=0.5, hi=0.75), Interval(lo=0.75, hi=1.0)]
        """
        if n < 1:
            raise ValueError(f'Need at least one piece, got {n}')
        if not self.is_bounded:
            raise DomainViolation(f'Can not subdivide unbounded {self}')
        span = self.hi - self.lo
        nodes = [self.lo]
        for i in range(1, n):
            node = self.lo + span * i / n
            nodes.append(min(max(node, nodes[-1]), self.hi))
        nodes.append(self.hi)
        return [Interval(a, b) for a, b in zip(nodes, nodes[1:])]

    # -----------------------------------------------------------------------------------------
    # arithmetic

    def __neg__(self) -> 'Interval':
        return Interval(-self.hi, -self.lo)

    def __pos__(self) -> 'Interval':
        return self

    def __abs__(self) -> 'Interval':
        return Interval(self.mignitude(), self.magnitude())

    def __add__(self, other):
        if not isinstance(other, (Interval, int, float)):
            return NotImplemented
        other = _coerce(other)
        return Interval(add_bounds(self.lo, other.lo)[0], add_bounds(self.hi, other.hi)[1])

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (Interval, int, float)):
            return NotImplemented
        other = _coerce(other)
        return Interval(add_bounds(self.lo, -other.hi)[0], add_bounds(self.hi, -other.lo)[1])

    def __rsub__(self, other):
        if not isinstance(other, (Interval, int, float)):
            return NotImplemented
        return _coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (Interval, int, float)):
            return NotImplemented
        other = _coerce(other)
        _require_bounded(self, other)
        if self.is_thin and other.is_thin:
            return Interval(*mul_bounds(self.lo, other.lo))
        lows = []
        highs = []
        for a in {self.lo, self.hi}:
            for b in {other.lo, other.hi}:
                lo, hi = mul_bounds(a, b)
                lows.append(lo)
                highs.append(hi)
        return Interval(min(lows), max(highs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (Interval, int, float)):
            return NotImplemented
        other = _coerce(other)
        if other.contains_zero():
            raise DivisionByZeroInterval(f'Division of {self} by {other}')
        _require_bounded(self, other)
        lows = []
        highs = []
        for a in {self.lo, self.hi}:
            for b in {other.lo, other.hi}:
                lo, hi = div_bounds(a, b)
                lows.append(lo)
                highs.append(hi)
        return Interval(min(lows), max(highs))

    def __rtruediv__(self, other):
        if not isinstance(other, (Interval, int, float)):
            return NotImplemented
        return _coerce(other) / self

    def __pow__(self, k: int) -> 'Interval':
        from capverify.interval_core.elementary import pow_int

        return pow_int(self, k)

    def scale2(self, exponent: int) -> 'Interval':
        """Multiply by 2**exponent (exact unless the result leaves the normal range)."""
        try:
            lo = math.ldexp(self.lo, exponent)
            hi = math.ldexp(self.hi, exponent)
        except OverflowError as err:
            raise DomainViolation(f'Overflow scaling {self} by 2**{exponent}') from err
        if lo != 0.0 and abs(lo) < 2.2250738585072014e-308 or hi != 0.0 and abs(hi) < 2.2250738585072014e-308:
            return self * Interval.from_rational(Fraction(2) ** exponent)
        if not (math.isfinite(lo) and math.isfinite(hi)) and self.is_bounded:
            raise DomainViolation(f'Overflow scaling {self} by 2**{exponent}')
        return Interval(lo, hi)

    # -----------------------------------------------------------------------------------------
    # output

    def to_literal(self) -> str:
        """
        >>> Interval(1, 2.5).to_literal()
        '[1,2.5]'
        """
        return f'[{self.lo:.17g},{self.hi:.17g}]'

    def __str__(self) -> str:
        return self.to_literal()


ZERO = Interval(0.0, 0.0)
ONE = Interval(1.0, 1.0)


def _coerce(value: 'Interval | int | float') -> Interval:
    if isinstance(value, Interval):
        return value
    return Interval.point(value)


def as_interval(value: 'Interval | int | float | str') -> Interval:
    if isinstance(value, str):
        return Interval.parse(value)
    return _coerce(value)


def _require_bounded(*items: Interval) -> None:
    for item in items:
        if not item.is_bounded:
            raise DomainViolation(f'Unbounded operand {item} is not supported here')


def _parse_endpoint(text: str, outward: int) -> float:
    text = text.strip()
    lowered = text.lower()
    if lowered in ('inf', '+inf', 'infinity'):
        return math.inf
    if lowered in ('-inf', '-infinity'):
        return -math.inf
    try:
        value = Fraction(text)
    except ValueError as err:
        raise InvalidInterval(f'Not a decimal number: {text!r}') from err
    if outward < 0:
        return float_down(value)
    return float_up(value)
