"""
    Named jet-evaluable test functions, selectable by name from the CLI.
"""

import dataclasses
import logging
from collections.abc import Callable

from cli_base.autodiscover import import_all_files

from capverify.taylor_ad import JetFunction


logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class Expression:
    name: str
    func: JetFunction
    truth: Callable  # same function on mpmath numbers
    description: str = ''
    periodic: bool = False


class ExpressionRegistry:
    def __init__(self):
        self._registry: dict[str, Expression] = {}

    def add(self, expression: Expression) -> None:
        logger.debug(f'Add expression: {expression.name}')
        if expression.name in self._registry:
            raise ValueError(f'Expression {expression.name!r} registered twice')
        self._registry[expression.name] = expression

    def get(self, name: str) -> Expression:
        try:
            return self._registry[name]
        except KeyError:
            raise KeyError(f'Unknown expression {name!r}, choose from: {", ".join(self.names())}') from None

    def names(self) -> list[str]:
        return sorted(self._registry)

    def __iter__(self):
        return iter(self._registry[name] for name in self.names())


expression_registry = ExpressionRegistry()


def register_expression(name: str, truth: Callable, periodic: bool = False):
    """
    Decorator to add a jet function to the expression registry.
    """

    def wrapper(func):
        description = (func.__doc__ or '').strip()
        expression_registry.add(
            Expression(name=name, func=func, truth=truth, description=description, periodic=periodic)
        )
        return func

    return wrapper


def get_expression(name: str) -> Expression:
    """
    >>> get_expression('exp').description
    'e^x'
    """
    return expression_registry.get(name)


# Register all expressions, just by import all files in this package:
import_all_files(package=__package__, init_file=__file__)
