"""
Interval matrices: norm bounds, Gershgorin discs and eigenvalue counting by LDL^T inertia.
"""

import dataclasses
import logging
from collections.abc import Sequence

import numpy as np

from capverify.errors import CertificateFailed
from capverify.interval_core import ZERO, Interval, sqrt


logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class IntervalMatrix:
    """
    >>> A = IntervalMatrix.from_array([[0, 1], [-1, 0]])
    >>> A.transpose()[0, 1], A.n
    (Interval(lo=-1.0, hi=-1.0), 2)
    """

    rows: tuple[tuple[Interval, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if n == 0 or any(len(row) != n for row in self.rows):
            raise ValueError('Interval matrices must be square and not empty')

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence['Interval | int | float']]) -> 'IntervalMatrix':
        return cls(tuple(tuple(Interval.point(value) for value in row) for row in rows))

    @classmethod
    def from_array(cls, array) -> 'IntervalMatrix':
        array = np.asarray(array, dtype=float)
        return cls.from_rows([[float(value) for value in row] for row in array])

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, index: tuple[int, int]) -> Interval:
        i, j = index
        return self.rows[i][j]

    def transpose(self) -> 'IntervalMatrix':
        return IntervalMatrix(tuple(zip(*self.rows)))

    def __add__(self, other: 'IntervalMatrix') -> 'IntervalMatrix':
        return IntervalMatrix(
            tuple(tuple(a + b for a, b in zip(row, other_row)) for row, other_row in zip(self.rows, other.rows))
        )

    def __sub__(self, other: 'IntervalMatrix') -> 'IntervalMatrix':
        return IntervalMatrix(
            tuple(tuple(a - b for a, b in zip(row, other_row)) for row, other_row in zip(self.rows, other.rows))
        )

    def scaled(self, factor: Interval | float) -> 'IntervalMatrix':
        return IntervalMatrix(tuple(tuple(value * factor for value in row) for row in self.rows))

    def shifted(self, sigma: Interval | float) -> 'IntervalMatrix':
        """self - sigma * identity"""
        return IntervalMatrix(
            tuple(
                tuple(value - sigma if i == j else value for j, value in enumerate(row))
                for i, row in enumerate(self.rows)
            )
        )

    def mid(self) -> np.ndarray:
        return np.array([[value.mid for value in row] for row in self.rows])

    def radius(self) -> np.ndarray:
        return np.array([[value.width_up() / 2 for value in row] for row in self.rows])

    def is_finite(self) -> bool:
        return all(np.isfinite(value.lo) and np.isfinite(value.hi) for row in self.rows for value in row)

    def quadratic_form(self, vector: Sequence[float]) -> Interval:
        """v^T A v / v^T v"""
        v = [Interval.point(float(value)) for value in vector]
        numerator = ZERO
        for i, row in enumerate(self.rows):
            row_sum = ZERO
            for j, value in enumerate(row):
                row_sum = row_sum + value * v[j]
            numerator = numerator + v[i] * row_sum
        denominator = ZERO
        for value in v:
            denominator = denominator + value * value
        return numerator / denominator

    def row_sum_norm(self) -> Interval:
        """Upper bound of the infinity norm"""
        bound = ZERO
        for row in self.rows:
            total = ZERO
            for value in row:
                total = total + value.magnitude()
            bound = Interval(0.0, max(bound.hi, total.hi))
        return bound

    def column_sum_norm(self) -> Interval:
        return self.transpose().row_sum_norm()

    def frobenius_norm(self) -> Interval:
        total = ZERO
        for row in self.rows:
            for value in row:
                magnitude = Interval.point(value.magnitude())
                total = total + magnitude * magnitude
        return Interval(0.0, sqrt(total).hi)

    def spectral_norm_bound(self) -> Interval:
        """
        ||A||_2 <= min(||A||_F, sqrt(||A||_1 ||A||_inf))

        >>> IntervalMatrix.from_array([[0, 1], [-1, 0]]).spectral_norm_bound()
        Interval(lo=0.0, hi=1.0)
        """
        mixed = sqrt(self.row_sum_norm() * self.column_sum_norm())
        return Interval(0.0, min(self.frobenius_norm().hi, mixed.hi))


def gershgorin_discs(matrix: IntervalMatrix) -> list[tuple[Interval, float]]:
    """(center range, radius) per row"""
    discs = []
    for i, row in enumerate(matrix.rows):
        radius = ZERO
        for j, value in enumerate(row):
            if i != j:
                radius = radius + value.magnitude()
        discs.append((row[i], radius.hi))
    return discs


def gershgorin_lower_bound(matrix: IntervalMatrix) -> float:
    """
    >>> gershgorin_lower_bound(IntervalMatrix.from_array([[2, 1], [1, 3]]))
    1.0
    """
    return min((center - radius).lo for center, radius in gershgorin_discs(matrix))


def ldl_inertia(matrix: IntervalMatrix, sigma: float) -> int:
    """
    Number of eigenvalues below sigma, the same for every symmetric matrix inside the
    interval matrix: the pivots of LDL^T of (A - sigma I) are enclosed and counted by sign.
    A pivot that contains zero makes the count inconclusive.

    >>> ldl_inertia(IntervalMatrix.from_array([[1, 0, 0], [0, 2, 0], [0, 0, 3]]), 2.5)
    2
    """
    shifted = matrix.shifted(sigma)
    n = shifted.n
    L = [[ZERO] * n for _ in range(n)]
    pivots = []
    for k in range(n):
        pivot = shifted[k, k]
        for j in range(k):
            pivot = pivot - L[k][j] * L[k][j] * pivots[j]
        if pivot.contains(0):
            raise CertificateFailed(f'Pivot {k} of the shift {sigma} straddles zero: {pivot}')
        pivots.append(pivot)
        for i in range(k + 1, n):
            value = shifted[i, k]
            for j in range(k):
                value = value - L[i][j] * L[k][j] * pivots[j]
            L[i][k] = value / pivot
    negative = sum(1 for pivot in pivots if pivot.certainly_negative())
    logger.debug(f'Inertia at {sigma}: {negative} of {n} eigenvalues below')
    return negative
