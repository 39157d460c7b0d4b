"""
    capverify CLI: demos, rigorous integrals and the verification pipelines
"""

import logging
import sys
from collections.abc import Sequence

from cli_base.autodiscover import import_all_files
from cli_base.cli_tools.version_info import print_version
from rich import print  # noqa
from tyro.extras import SubcommandApp

import capverify
from capverify import constants


logger = logging.getLogger(__name__)

app = SubcommandApp()

# Register all CLI commands, just by import all files in this package:
import_all_files(package=__package__, init_file=__file__)


DESCRIPTION = (
    f'{constants.CLI_EPILOG}\n\n'
    f'Exit codes: {constants.EXIT_PASS} PASS, {constants.EXIT_FAIL} FAIL or error, {constants.EXIT_UNKNOWN} UNKNOWN'
)


@app.command
def version():
    """Print version and exit"""
    # The version banner is printed on every call anyway
    sys.exit(constants.EXIT_PASS)


def main(args: Sequence[str] | None = None):
    print_version(capverify)
    app.cli(
        prog='./cli.py',
        description=DESCRIPTION,
        use_underscores=False,
        sort_subcommands=True,
        args=args,
    )
