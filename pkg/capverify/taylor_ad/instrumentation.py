"""
Context local counting of coefficient products, used to check the O(N**2) cost of jet recurrences.
"""

import dataclasses
from collections.abc import Iterator
from contextlib import contextmanager
from contextvars import ContextVar


@dataclasses.dataclass
class ProductCounter:
    products: int = 0


_counter: ContextVar[ProductCounter | None] = ContextVar('capverify_jet_products', default=None)


@contextmanager
def count_coefficient_products() -> Iterator[ProductCounter]:
    """
    >>> from capverify.interval_core import Interval
    >>> from capverify.taylor_ad.jet import jet_variable
    >>> with count_coefficient_products() as counter:
    ...     _ = jet_variable(Interval(1, 1), 2) * jet_variable(Interval(1, 1), 2)
    >>> counter.products
    4
    """
    counter = ProductCounter()
    token = _counter.set(counter)
    try:
        yield counter
    finally:
        _counter.reset(token)


def record_products(count: int) -> None:
    if count and (counter := _counter.get()) is not None:
        counter.products += count
