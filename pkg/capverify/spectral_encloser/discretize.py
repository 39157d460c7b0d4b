"""
Finite rank surrogate of  h -> I(rho) h(rho) + int T_3(rho, r) h(r) dr  on the band of f_rho.

Basis: normalized indicator functions e_i = 1_{C_i} / sqrt(|C_i|) of n equal cells. The operator is
compared with  D + P K P,  D the multiplication by cell wise constants (the cell averages of I):

    ||A - (D + P K P)|| <= max_i osc(I on C_i) + ||K - P K P||_HS

with ||K - P K P||_HS^2 = sum_ij int int |k - mean_ij(k)|^2. On range(P) the surrogate is the
matrix M, on its complement the multiplication by the cell constants.
"""

import dataclasses
import logging
from collections.abc import Callable
from typing import Protocol

from capverify.interval_core import ZERO, Interval, sqrt
from capverify.spectral_encloser.kernels import cell_kernel_integral, cell_kernel_square, multiplier_range
from capverify.spectral_encloser.linalg import IntervalMatrix
from capverify.spectral_encloser.profile import AnnularProfile


logger = logging.getLogger(__name__)

DEFAULT_CELLS = 32


class CellKernel(Protocol):
    def integral(self, ci: Interval, cj: Interval) -> Interval:
        """int_ci int_cj k(rho, r) dr drho"""

    def oscillation_square(self, ci: Interval, cj: Interval) -> Interval:
        """Upper bound of int_ci int_cj |k - mean|^2"""


@dataclasses.dataclass(frozen=True)
class ConstantKernel:
    value: Interval

    def integral(self, ci: Interval, cj: Interval) -> Interval:
        return self.value * ci.width() * cj.width()

    def oscillation_square(self, ci: Interval, cj: Interval) -> Interval:
        return ZERO


@dataclasses.dataclass(frozen=True)
class ProfileKernel:
    profile: AnnularProfile

    def integral(self, ci: Interval, cj: Interval) -> Interval:
        return cell_kernel_integral(ci, cj, self.profile)

    def oscillation_square(self, ci: Interval, cj: Interval) -> Interval:
        return cell_kernel_square(ci, cj, self.profile)


Multiplier = Callable[[Interval], Interval]


@dataclasses.dataclass(frozen=True)
class OperatorEnclosure:
    n: int
    cells: tuple[Interval, ...]
    M: IntervalMatrix
    truncation: Interval
    diag_mult: tuple[Interval, ...]

    def __post_init__(self):
        if self.truncation.lo < 0:
            raise ValueError(f'Negative truncation bound: {self.truncation}')
        if not self.M.is_finite():
            raise ValueError('Matrix enclosure has infinite entries')

    def summary(self) -> dict:
        return {
            'n': self.n,
            'truncation': self.truncation,
            'matrix_norm': self.M.spectral_norm_bound(),
            'diag_mult_hull': Interval.hull_of(self.diag_mult),
        }


def discretize(
    profile: AnnularProfile,
    n: int = DEFAULT_CELLS,
    kernel: CellKernel | None = None,
    multiplier: Multiplier | None = None,
) -> OperatorEnclosure:
    """
    >>> from capverify.spectral_encloser.profile import build_profile
    >>> op = discretize(build_profile(0.5, 1.5), 2, kernel=ConstantKernel(Interval(3, 3)), multiplier=lambda c: ZERO)
    >>> op.M[0, 1], op.truncation
    (Interval(lo=1.5, hi=1.5), Interval(lo=0.0, hi=0.0))
    """
    if n < 2:
        raise ValueError(f'Need at least two cells, got {n}')
    if kernel is None:
        kernel = ProfileKernel(profile)
    if multiplier is None:

        def multiplier(cell: Interval) -> Interval:
            return multiplier_range(cell, profile)

    cells = tuple(profile.band.subdivide(n))
    diag_mult = tuple(multiplier(cell) for cell in cells)

    rows = []
    hs_square = ZERO
    for ci in cells:
        row = []
        for cj in cells:
            # <e_i, K e_j> = int int k / sqrt(|ci| |cj|)
            row.append(kernel.integral(ci, cj) / sqrt(ci.width() * cj.width()))
            hs_square = hs_square + kernel.oscillation_square(ci, cj)
        rows.append(row)
    for i, value in enumerate(diag_mult):
        rows[i][i] = rows[i][i] + value.midpoint()

    multiplier_spread = max(value.width_up() for value in diag_mult)
    truncation = Interval(0.0, (Interval.point(multiplier_spread) + sqrt(hs_square)).hi)
    M = IntervalMatrix.from_rows(rows)
    logger.info(f'Discretized with {n} cells: truncation {truncation}')
    return OperatorEnclosure(n=n, cells=cells, M=M, truncation=truncation, diag_mult=diag_mult)
