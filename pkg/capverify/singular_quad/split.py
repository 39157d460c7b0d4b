import dataclasses

from capverify.interval_core import PI, Interval


DEFAULT_EPS = 1e-3
DEFAULT_SPLIT_ORDER = 8


@dataclasses.dataclass(frozen=True)
class SplitSpec:
    """
    Near window |y| < eps1, far window |y - pi| < eps2, Taylor order in both expansions.

    >>> SplitSpec().eps1
    Interval(lo=0.001, hi=0.001)
    """

    eps1: Interval = Interval(DEFAULT_EPS, DEFAULT_EPS)
    eps2: Interval = Interval(DEFAULT_EPS, DEFAULT_EPS)
    order: int = DEFAULT_SPLIT_ORDER

    def __post_init__(self):
        object.__setattr__(self, 'eps1', Interval.point(self.eps1))
        object.__setattr__(self, 'eps2', Interval.point(self.eps2))
        if not (self.eps1.is_thin and self.eps2.is_thin):
            raise ValueError('Split radii must be floating point numbers')
        if not (self.eps1.lo > 0 and self.eps2.lo > 0):
            raise ValueError(f'Split radii must be > 0, got {self.eps1} and {self.eps2}')
        if not (self.eps1 + self.eps2).certainly_lt(PI):
            raise ValueError(f'eps1 + eps2 must be < pi, got {self.eps1} + {self.eps2}')
        if self.order < 2:
            raise ValueError(f'Split order must be >= 2, got {self.order}')

    @classmethod
    def from_floats(cls, eps1: float, eps2: float, order: int = DEFAULT_SPLIT_ORDER) -> 'SplitSpec':
        return cls(Interval.point(eps1), Interval.point(eps2), order)

    def as_dict(self) -> dict:
        return {'eps1': self.eps1.lo, 'eps2': self.eps2.lo, 'order': self.order}
