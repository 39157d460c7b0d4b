import logging
import os
import sys

from cli_base.cli_tools.dev_tools import run_coverage, run_nox, run_unittest_cli
from cli_base.cli_tools.subprocess_utils import verbose_check_call
from cli_base.cli_tools.verbosity import setup_logging
from cli_base.tyro_commands import TyroVerbosityArgType
from rich import print  # noqa

from capverify.cli_dev import PACKAGE_ROOT, app
from capverify.utilities.fuzz import containment_fuzz


logger = logging.getLogger(__name__)

DEFAULT_FUZZ_SAMPLES = 10_000


def fuzz_samples(default: int = DEFAULT_FUZZ_SAMPLES) -> int:
    return int(os.environ.get('CAPVERIFY_FUZZ_SAMPLES', default))


@app.command
def mypy(verbosity: TyroVerbosityArgType):
    """Run Mypy (configured in pyproject.toml)"""
    verbose_check_call('mypy', '.', cwd=PACKAGE_ROOT, verbose=verbosity > 0, exit_on_error=True)


@app.command
def fuzz(samples: int | None = None, seed: int = 0, verbosity: TyroVerbosityArgType = 1):
    """
    Containment fuzzing of the interval operations against 50 digit mpmath values.
    Default sample count from $CAPVERIFY_FUZZ_SAMPLES.
    """
    setup_logging(verbosity=verbosity)
    if samples is None:
        samples = fuzz_samples()
    result = containment_fuzz(samples=samples, seed=seed)
    for failure in result.failures:
        print(f'[red]{failure}')
    print(f'{result.checked} checks, {result.skipped} skipped, {len(result.failures)} failures')
    sys.exit(0 if result.ok else 1)


@app.command  # Dummy command
def test():
    """
    Run unittests (set CAPVERIFY_FULL_TESTS=1 to include the full certification runs)
    """
    run_unittest_cli()


@app.command  # Dummy command
def coverage():
    """
    Run tests and show coverage report.
    """
    run_coverage()


@app.command  # Dummy "nox" command
def nox():
    """
    Run nox
    """
    run_nox()
