import dataclasses
from collections.abc import Iterable, Iterator

from capverify.interval_core.interval import ZERO, Interval, _coerce


@dataclasses.dataclass(frozen=True)
class IntervalVec:
    """
    Fixed length vector of intervals with componentwise arithmetic.

    >>> v = IntervalVec.from_values([1, 2])
    >>> v.dot(v)
    Interval(lo=5.0, hi=5.0)
    """

    components: tuple[Interval, ...]

    def __post_init__(self):
        object.__setattr__(self, 'components', tuple(_coerce(c) for c in self.components))

    @classmethod
    def from_values(cls, values: Iterable[Interval | int | float]) -> 'IntervalVec':
        return cls(tuple(_coerce(value) for value in values))

    @classmethod
    def zeros(cls, size: int) -> 'IntervalVec':
        return cls((ZERO,) * size)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.components)

    def __getitem__(self, index: int) -> Interval:
        return self.components[index]

    def _check_size(self, other: 'IntervalVec') -> None:
        if len(other) != len(self):
            raise ValueError(f'Vector size mismatch: {len(self)} != {len(other)}')

    def __add__(self, other: 'IntervalVec') -> 'IntervalVec':
        self._check_size(other)
        return IntervalVec(tuple(a + b for a, b in zip(self, other)))

    def __sub__(self, other: 'IntervalVec') -> 'IntervalVec':
        self._check_size(other)
        return IntervalVec(tuple(a - b for a, b in zip(self, other)))

    def __neg__(self) -> 'IntervalVec':
        return IntervalVec(tuple(-a for a in self))

    def scale(self, factor: Interval | int | float) -> 'IntervalVec':
        return IntervalVec(tuple(a * factor for a in self))

    def dot(self, other: 'IntervalVec') -> Interval:
        self._check_size(other)
        total = ZERO
        for a, b in zip(self, other):
            total = total + a * b
        return total

    def hull(self, other: 'IntervalVec') -> 'IntervalVec':
        self._check_size(other)
        return IntervalVec(tuple(a.hull(b) for a, b in zip(self, other)))

    def contains(self, other: 'IntervalVec') -> bool:
        self._check_size(other)
        return all(a.contains(b) for a, b in zip(self, other))

    def max_width(self) -> float:
        return max((c.width_up() for c in self), default=0.0)

    def norm_inf(self) -> float:
        """Upper bound of the maximum norm."""
        return max((c.magnitude() for c in self), default=0.0)

    def midpoints(self) -> list[float]:
        return [c.mid for c in self]

    def to_literal(self) -> str:
        return '(' + ', '.join(c.to_literal() for c in self) + ')'
