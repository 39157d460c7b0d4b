from functools import wraps

from rich.console import Console


def print_exception_decorator(func):
    """
    Print unexpected errors as rich traceback and exit with code 1.
    """

    @wraps(func)
    def func_wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (SystemExit, KeyboardInterrupt):
            raise
        except Exception as err:
            console = Console()
            console.print_exception(show_locals=False)
            raise SystemExit(1) from err

    return func_wrapper
