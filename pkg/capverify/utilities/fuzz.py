"""
Containment fuzzing: random intervals, random points inside, a 50 digit mpmath value of the
same operation at those points must lie in the interval result.
"""

import dataclasses
import logging
import random
from collections.abc import Callable

import mpmath

from capverify.errors import CapVerifyError
from capverify.interval_core import Interval, binary_op, elementary
from capverify.interval_core.elementary import BINARY_OPS


logger = logging.getLogger(__name__)

FUZZ_DIGITS = 50
POINTS_PER_SAMPLE = 3

# name -> (mpmath function, admissible lower bound of the argument or None)
UNARY_OPERATIONS: dict[str, tuple[Callable, float | None]] = {
    'sqr': (lambda x: x * x, None),
    'sqrt': (mpmath.sqrt, 0.0),
    'exp': (mpmath.exp, None),
    'log': (mpmath.log, 1e-300),
    'sin': (mpmath.sin, None),
    'cos': (mpmath.cos, None),
    'tan': (mpmath.tan, None),
    'atan': (mpmath.atan, None),
    'sinh': (mpmath.sinh, None),
    'cosh': (mpmath.cosh, None),
}
BINARY_OPERATIONS = sorted(BINARY_OPS)


@dataclasses.dataclass
class FuzzResult:
    samples: int
    checked: int = 0
    skipped: int = 0
    failures: list[str] = dataclasses.field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def random_interval(rng: random.Random, scale: float, lower: float | None = None) -> Interval:
    lo = rng.uniform(-scale, scale)
    if lower is not None:
        lo = max(lo, lower)
    width = rng.choice((0.0, 1e-12, 1e-6, 1e-2, 1.0)) * rng.random()
    return Interval(lo, lo + width)


def _points(rng: random.Random, x: Interval) -> list[float]:
    return [x.lo, x.hi] + [rng.uniform(x.lo, x.hi) for _ in range(POINTS_PER_SAMPLE - 2)]


def _inside(truth, result: Interval) -> bool:
    return mpmath.mpf(result.lo) <= truth <= mpmath.mpf(result.hi)


def containment_fuzz(samples: int, seed: int = 0, scale: float = 20.0) -> FuzzResult:
    """
    >>> containment_fuzz(samples=20).ok
    True
    """
    rng = random.Random(seed)
    result = FuzzResult(samples=samples)
    unary = sorted(UNARY_OPERATIONS)
    with mpmath.workdps(FUZZ_DIGITS):
        for index in range(samples):
            if index % 2:
                name = rng.choice(BINARY_OPERATIONS)
                x = random_interval(rng, scale)
                y = random_interval(rng, scale)
                try:
                    value = binary_op(name, x, y)
                except CapVerifyError:
                    result.skipped += 1
                    continue
                truth_func = BINARY_OPS[name]
                pairs = zip(_points(rng, x), _points(rng, y))
                for px, py in pairs:
                    result.checked += 1
                    truth = truth_func(mpmath.mpf(px), mpmath.mpf(py))
                    if not _inside(truth, value):
                        result.failures.append(f'{name}({px!r}, {py!r}) = {truth} not in {value}')
            else:
                name = rng.choice(unary)
                truth_func, lower = UNARY_OPERATIONS[name]
                x = random_interval(rng, scale, lower)
                try:
                    value = elementary(name, x)
                except CapVerifyError:
                    result.skipped += 1
                    continue
                for px in _points(rng, x):
                    result.checked += 1
                    truth = truth_func(mpmath.mpf(px))
                    if not _inside(truth, value):
                        result.failures.append(f'{name}({px!r}) = {truth} not in {value}')
    logger.info(f'Fuzzed {samples} samples: {result.checked} checks, {len(result.failures)} failures')
    return result
