"""
Mathematical constants as two-endpoint enclosures.

The decimal expansions below are truncated after 36 digits, the enclosing radius 1e-35
covers the truncation.
"""

from fractions import Fraction

from capverify.interval_core.interval import Interval


def _enclose(digits: str, radius: str = '1e-35') -> Interval:
    center = Fraction(digits)
    delta = Fraction(radius)
    return Interval.from_rational(center - delta, center + delta)


PI = _enclose('3.14159265358979323846264338327950288')
HALF_PI = PI / 2
TWO_PI = PI * 2
LN2 = _enclose('0.693147180559945309417232121458176568')
