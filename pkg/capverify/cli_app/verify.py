import logging
from pathlib import Path
from typing import Literal

from cli_base.cli_tools.verbosity import setup_logging
from cli_base.tyro_commands import TyroVerbosityArgType
from rich import print  # noqa
from tyro.conf import Positional

from capverify.cli_app import app
from capverify.cli_app.output import finish
from capverify.cli_app.settings import get_user_settings
from capverify.muskat_verify import verify_di2, verify_scan, verify_theorem1
from capverify.reporting import ProofReport
from capverify.spectral_encloser import verify_spectral
from capverify.user_settings import UserSettings
from capverify.utilities import print_exception_decorator


logger = logging.getLogger(__name__)

TheoremType = Literal['muskat-t1', 'muskat-scan', 'muskat-di2', 'spectral']


def run_verification(theorem: TheoremType, user_settings: UserSettings) -> ProofReport:
    muskat = user_settings.muskat
    if theorem == 'muskat-t1':
        return verify_theorem1(tol=muskat.tol, budget=muskat.budget)
    if theorem == 'muskat-scan':
        return verify_scan(
            max_depth=muskat.max_depth,
            tol=muskat.tol,
            budget=muskat.scan_budget,
            workers=muskat.workers,
            audit=muskat.audit,
            coverage=muskat.coverage,
            output_dir=Path(user_settings.report.output_dir).expanduser(),
        )
    if theorem == 'muskat-di2':
        return verify_di2(tol=muskat.tol, budget=muskat.budget)
    spectral = user_settings.spectral
    return verify_spectral(n=spectral.n, a_inner=spectral.a_inner, a_outer=spectral.a_outer)


@app.command
@print_exception_decorator
def verify(
    theorem: Positional[TheoremType],
    tol: float | None = None,
    budget: int | None = None,
    scan_budget: int | None = None,
    max_depth: int | None = None,
    workers: int | None = None,
    audit: bool | None = None,
    coverage: float | None = None,
    n: int | None = None,
    output_dir: str | None = None,
    verbosity: TyroVerbosityArgType = 1,
):
    """
    Certify one of the sign conditions and write its proof report.
    Exit code: 0 PASS, 1 FAIL, 2 UNKNOWN.
    """
    setup_logging(verbosity=verbosity)
    user_settings = get_user_settings(verbosity=verbosity)
    muskat_overrides = dict(
        tol=tol,
        budget=budget,
        scan_budget=scan_budget,
        max_depth=max_depth,
        workers=workers,
        audit=audit,
        coverage=coverage,
    )
    overrides = (
        (user_settings.muskat, muskat_overrides),
        (user_settings.spectral, {'n': n}),
        (user_settings.report, {'output_dir': output_dir}),
    )
    for section, values in overrides:
        for name, value in values.items():
            if value is not None:
                setattr(section, name, value)

    report = run_verification(theorem, user_settings)
    finish(report, user_settings.report.output_dir)
