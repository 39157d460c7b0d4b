import logging

from capverify.errors import BudgetExhausted
from capverify.interval_core import ZERO, Interval
from capverify.quad_rigor.adaptive import DEFAULT_BUDGET, integrate_adaptive
from capverify.quad_rigor.enclosure import DecayBound, Enclosure
from capverify.taylor_ad import JetFunction


logger = logging.getLogger(__name__)

MAX_CUTOFF_DOUBLINGS = 64


def integrate_halfline(
    f: JetFunction,
    a: Interval | float,
    decay: DecayBound,
    tol: float,
    budget: int = DEFAULT_BUDGET,
) -> Enclosure:
    """
    Integral over [a, oo): adaptive body on [a, M] plus the decay tail beyond M.
    M starts at the cutoff and is doubled until the tail enclosure is at most tol / 2 wide.

    >>> from capverify.interval_core import ONE
    >>> e = integrate_halfline(lambda x: 1 / (x * x), 1, DecayBound(C=ONE, k=2, cutoff=1.0), tol=1e-3)
    >>> e.value.contains(1), e.width() <= 1e-3
    (True, True)
    """
    a = Interval.point(a)
    M = max(decay.cutoff, a.hi)
    tail = decay.tail(M)
    doublings = 0
    wide_tail = None
    while tail.width_up() > tol / 2:
        if doublings >= MAX_CUTOFF_DOUBLINGS:
            wide_tail = f'Decay tail {tail} stays above {tol / 2} up to M={M}'
            logger.info(wide_tail)
            break
        M *= 2
        doublings += 1
        tail = decay.tail(M)
    logger.debug(f'Half line cut at M={M}, tail {tail}')

    tail_enclosure = Enclosure.build(ZERO, tail, scheme='decay-tail')
    try:
        body = integrate_adaptive(f, a, M, tol=tol / 2, budget=budget)
    except BudgetExhausted as err:
        enclosure = _combine(err.enclosure, tail_enclosure)
        raise BudgetExhausted(str(err), enclosure=enclosure) from err
    enclosure = _combine(body, tail_enclosure)
    if wide_tail:
        raise BudgetExhausted(wide_tail, enclosure=enclosure)
    return enclosure


def _combine(body: Enclosure, tail: Enclosure) -> Enclosure:
    return Enclosure.build(
        body.main,
        body.error_term + tail.error_term,
        cells=body.cells,
        scheme='halfline',
        parts=(('body', body), ('tail', tail)),
    )
