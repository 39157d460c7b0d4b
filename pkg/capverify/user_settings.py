import dataclasses
from pathlib import Path

from capverify.constants import MAX_JET_ORDER
from capverify.muskat_verify.integrals import DEFAULT_MUSKAT_TOL
from capverify.muskat_verify.scan import DEFAULT_MAX_DEPTH, DEFAULT_SCAN_BUDGET
from capverify.muskat_verify.verify import DEFAULT_COVERAGE
from capverify.quad_rigor.adaptive import DEFAULT_BUDGET, DEFAULT_ORDER
from capverify.singular_quad.hilbert import DEFAULT_HILBERT_TOL
from capverify.singular_quad.split import DEFAULT_EPS, DEFAULT_SPLIT_ORDER
from capverify.spectral_encloser.discretize import DEFAULT_CELLS


SETTINGS_VERSION = 1


@dataclasses.dataclass
class QuadratureSettings:
    tol: float = 1e-10
    budget: int = DEFAULT_BUDGET
    order: int = DEFAULT_ORDER  # Taylor order of the adaptive panels
    max_jet_order: int = MAX_JET_ORDER


@dataclasses.dataclass
class HilbertSettings:
    eps1: float = DEFAULT_EPS  # near window |y| < eps1
    eps2: float = DEFAULT_EPS  # far window |y - pi| < eps2
    order: int = DEFAULT_SPLIT_ORDER
    tol: float = DEFAULT_HILBERT_TOL


@dataclasses.dataclass
class MuskatSettings:
    tol: float = DEFAULT_MUSKAT_TOL
    budget: int = DEFAULT_BUDGET
    scan_budget: int = DEFAULT_SCAN_BUDGET  # per double integral of one scan cell
    max_depth: int = DEFAULT_MAX_DEPTH
    workers: int = 1
    audit: bool = True  # split every decided scan cell once more
    coverage: float = DEFAULT_COVERAGE  # decided area fraction needed for PASS


@dataclasses.dataclass
class SpectralSettings:
    n: int = DEFAULT_CELLS
    a_inner: float = 0.95
    a_outer: float = 1.0


@dataclasses.dataclass
class ReportSettings:
    output_dir: str = str(Path.home() / 'capverify-reports')


@dataclasses.dataclass
class UserSettings:
    """
    capverify - settings

    All tolerances and budgets of the verification commands. Every report embeds the
    values it was computed with. Command line flags override single values.
    """

    settings_version: int = SETTINGS_VERSION

    quadrature: QuadratureSettings = dataclasses.field(default_factory=QuadratureSettings)
    hilbert: HilbertSettings = dataclasses.field(default_factory=HilbertSettings)
    muskat: MuskatSettings = dataclasses.field(default_factory=MuskatSettings)
    spectral: SpectralSettings = dataclasses.field(default_factory=SpectralSettings)
    report: ReportSettings = dataclasses.field(default_factory=ReportSettings)
