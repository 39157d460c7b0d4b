from pathlib import Path

import capverify


CLI_EPILOG = 'capverify: rigorous interval enclosures for computer-assisted proofs'

BASE_PATH = Path(capverify.__file__).parent

# Process exit codes of all verification commands:
EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_UNKNOWN = 2

# Maximum supported Taylor jet order:
MAX_JET_ORDER = 16
