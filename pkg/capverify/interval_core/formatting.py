"""
Compact human readable interval notation.

The shared leading digits of both endpoints are printed once, followed by "^", the remaining
digits of the lower endpoint, "_" and the remaining digits of the upper endpoint:
[123456, 123789] is written as "123^456_789".
"""

import math

from capverify.interval_core.interval import Interval


def _plain(value: float) -> str | None:
    if not math.isfinite(value):
        return None
    text = repr(value)
    if 'e' in text:
        return None
    if text.endswith('.0'):
        text = text[:-2]
    return text


def _align(lo_text: str, hi_text: str) -> tuple[str, str] | None:
    lo_int, _, lo_frac = lo_text.partition('.')
    hi_int, _, hi_frac = hi_text.partition('.')
    if len(lo_int) != len(hi_int):
        return None
    size = max(len(lo_frac), len(hi_frac))
    if size == 0:
        return lo_int, hi_int
    return f'{lo_int}.{lo_frac.ljust(size, "0")}', f'{hi_int}.{hi_frac.ljust(size, "0")}'


def format_compressed(x: Interval, digits: int = 3) -> str:
    """
    >>> format_compressed(Interval(123456, 123789))
    '123^456_789'
    >>> format_compressed(Interval(1.70833, 1.77994), digits=1)
    '1.7^0833_7994'
    >>> format_compressed(Interval(5, 5))
    '5'
    >>> format_compressed(Interval(-0.5, 0.5))
    '[-0.5,0.5]'
    """
    if digits < 1:
        raise ValueError(f'digits must be >= 1, got {digits}')
    lo_text, hi_text = _plain(x.lo), _plain(x.hi)
    if lo_text is None or hi_text is None:
        return x.to_literal()
    if x.is_thin:
        return lo_text
    aligned = _align(lo_text, hi_text)
    if aligned is None:
        return x.to_literal()
    lo_text, hi_text = aligned
    shared = 0
    for lo_char, hi_char in zip(lo_text, hi_text):
        if lo_char != hi_char:
            break
        shared += 1
    keep = min(shared, len(lo_text) - digits)
    while keep > 0 and lo_text[keep - 1] == '.':
        keep -= 1
    if keep <= 0 or lo_text[:keep] == '-':
        return x.to_literal()
    return f'{lo_text[:keep]}^{lo_text[keep:]}_{hi_text[keep:]}'


def parse_compressed(text: str) -> Interval:
    """
    Outward rounded inverse of format_compressed(), also accepts "[lo,hi]" literals.

    >>> parse_compressed('123^456_789')
    Interval(lo=123456.0, hi=123789.0)
    >>> parse_compressed('1.7^0833_7994').contains(Interval(1.70833, 1.77994))
    True
    """
    return Interval.parse(text, outward=True)
