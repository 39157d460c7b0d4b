from capverify.interval_core import ZERO, Interval


def power_moment(n: int, u0: Interval, u1: Interval) -> Interval:
    """
    Integral of t**n over [u0, u1].

    >>> power_moment(2, Interval(-1, -1), Interval(1, 1))
    Interval(lo=0.6666666666666666, hi=0.6666666666666667)
    """
    return (u1 ** (n + 1) - u0 ** (n + 1)) / (n + 1)


def coefficient_moment(C: Interval, n: int, u0: Interval, u1: Interval) -> Interval:
    """
    Enclosure of the integral of c(t) * t**n over [u0, u1] for any function c with values in C.

    On a range where t**n keeps its sign this is C times the moment (mean value theorem),
    odd powers get split at zero.

    >>> coefficient_moment(Interval(1, 2), 1, Interval(-1, -1), Interval(1, 1))
    Interval(lo=-0.5, hi=0.5)
    """
    if n % 2 == 1 and u0.lo < 0.0 < u1.hi:
        return C * power_moment(n, u0, ZERO) + C * power_moment(n, ZERO, u1)
    return C * power_moment(n, u0, u1)
