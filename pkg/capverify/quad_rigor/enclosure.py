import dataclasses
import logging
from collections.abc import Iterable

from capverify.interval_core import ZERO, Interval
from capverify.quad_rigor.integrands import value_enclosure
from capverify.taylor_ad import JetFunction


logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class Enclosure:
    """
    Rigorous enclosure of an integral: value contains main + error_term.

    >>> e = Enclosure.build(Interval(1, 1), Interval(-0.5, 0.25), scheme='demo')
    >>> e.value
    Interval(lo=0.5, hi=1.25)
    >>> (e + e).value
    Interval(lo=1.0, hi=2.5)
    """

    value: Interval
    main: Interval
    error_term: Interval
    cells: int = 1
    scheme: str = ''
    parts: tuple[tuple[str, 'Enclosure'], ...] = ()

    def __post_init__(self):
        if self.cells < 1:
            raise ValueError(f'An enclosure needs at least one cell, got {self.cells}')
        if not (self.main + self.error_term).subset(self.value):
            raise ValueError(f'Value {self.value} does not contain main + error term')

    @classmethod
    def build(
        cls,
        main: Interval,
        error_term: Interval = ZERO,
        *,
        cells: int = 1,
        scheme: str = '',
        parts: Iterable[tuple[str, 'Enclosure']] = (),
    ) -> 'Enclosure':
        return cls(
            value=main + error_term,
            main=main,
            error_term=error_term,
            cells=cells,
            scheme=scheme,
            parts=tuple(parts),
        )

    @classmethod
    def exact(cls, value: Interval, *, scheme: str = 'exact') -> 'Enclosure':
        return cls.build(value, ZERO, scheme=scheme)

    def __add__(self, other: 'Enclosure') -> 'Enclosure':
        if not isinstance(other, Enclosure):
            return NotImplemented
        return Enclosure.build(
            self.main + other.main,
            self.error_term + other.error_term,
            cells=self.cells + other.cells,
            scheme=self.scheme if self.scheme == other.scheme else 'sum',
        )

    def scaled(self, factor: Interval | int | float) -> 'Enclosure':
        """Enclosure of factor * integral, the factor may be any interval constant."""
        return Enclosure.build(
            self.main * factor,
            self.error_term * factor,
            cells=self.cells,
            scheme=self.scheme,
            parts=self.parts,
        )

    def with_parts(self, **parts: 'Enclosure') -> 'Enclosure':
        return dataclasses.replace(self, parts=tuple(parts.items()))

    def width(self) -> float:
        return self.value.width_up()

    def as_dict(self) -> dict:
        data = {
            'value': self.value.to_literal(),
            'main': self.main.to_literal(),
            'error_term': self.error_term.to_literal(),
            'cells': self.cells,
            'scheme': self.scheme,
        }
        if self.parts:
            data['parts'] = {name: part.as_dict() for name, part in self.parts}
        return data


def sum_enclosures(enclosures: Iterable[Enclosure], *, scheme: str) -> Enclosure:
    """Sum in the given order, so the result only depends on that order."""
    main = ZERO
    error = ZERO
    cells = 0
    for enclosure in enclosures:
        main = main + enclosure.main
        error = error + enclosure.error_term
        cells += enclosure.cells
    return Enclosure.build(main, error, cells=max(cells, 1), scheme=scheme)


@dataclasses.dataclass(frozen=True)
class DecayBound:
    """
    Hypothesis |f(x)| <= C / |x|**k for all |x| >= cutoff.

    >>> DecayBound(C=Interval(1, 1), k=2, cutoff=1.0).tail(4.0)
    Interval(lo=-0.25, hi=0.25)
    """

    C: Interval
    k: int
    cutoff: float

    def __post_init__(self):
        if self.C.lo < 0:
            raise ValueError(f'Decay constant must be >= 0, got {self.C}')
        if self.k < 2:
            raise ValueError(f'Decay exponent must be >= 2, got {self.k}')
        if not self.cutoff > 0:
            raise ValueError(f'Cutoff must be > 0, got {self.cutoff}')

    def tail(self, M: float | None = None) -> Interval:
        """Symmetric enclosure of the one sided tail integral over [M, oo)."""
        if M is None:
            M = self.cutoff
        if M < self.cutoff:
            raise ValueError(f'Tail start {M} is below the cutoff {self.cutoff}')
        bound = self.C / (self.k - 1) / Interval.point(M) ** (self.k - 1)
        return Interval(-bound.hi, bound.hi)

    def verify(self, f: JetFunction, upto: float, pieces: int = 64) -> bool:
        """
        Check the hypothesis on the finite window [cutoff, upto] by interval evaluation.
        """
        for piece in Interval(self.cutoff, upto).subdivide(pieces):
            scaled = abs(value_enclosure(f, piece)) * piece**self.k
            if scaled.hi > self.C.lo:
                logger.info(f'Decay bound fails on {piece}: {scaled} > {self.C}')
                return False
        return True
