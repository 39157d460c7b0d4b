from unittest import TestCase

from cli_base.cli_tools.test_utils.rich_test_utils import NoColorEnvRich, invoke

from capverify import constants
from capverify.cli_dev import PACKAGE_ROOT


class ReadmeTestCase(TestCase):
    def assert_in_content(self, got: str, parts: tuple[str, ...]):
        for part in parts:
            self.assertIn(part, got)

    def test_main_help(self):
        with NoColorEnvRich():
            stdout = invoke(cli_bin=PACKAGE_ROOT / 'cli.py', args=['--help'], strip_line_prefix='usage: ')
        self.assert_in_content(
            got=stdout,
            parts=(
                'usage: ./cli.py [-h]',
                ' version ',
                ' demo ',
                ' quad ',
                ' hilbert ',
                ' verify ',
                'Print version and exit',
                constants.CLI_EPILOG,
            ),
        )
        readme = (PACKAGE_ROOT / 'README.md').read_text()
        for command in ('demo', 'quad', 'hilbert', 'verify', 'edit-settings', 'print-settings'):
            self.assertIn(f'./cli.py {command}', readme)

    def test_dev_help(self):
        with NoColorEnvRich():
            stdout = invoke(cli_bin=PACKAGE_ROOT / 'dev-cli.py', args=['--help'], strip_line_prefix='usage: ')
        self.assert_in_content(
            got=stdout,
            parts=(
                'usage: ./dev-cli.py [-h]',
                ' lint ',
                ' coverage ',
                ' fuzz ',
                ' mypy ',
                constants.CLI_EPILOG,
            ),
        )
