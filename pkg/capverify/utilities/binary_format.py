from fractions import Fraction

import mpmath


def round_rational(value: Fraction, bits: int, rounding: str) -> mpmath.mpf:
    """
    Round an exact rational to a binary number with `bits` significant bits.
    rounding: 'f' toward -inf, 'c' toward +inf, 'n' to nearest.

    >>> round_rational(Fraction(11, 10), 10, 'f') < round_rational(Fraction(11, 10), 10, 'c')
    True
    """
    if bits < 2:
        raise ValueError(f'Need at least two bits, got {bits}')
    return mpmath.fdiv(value.numerator, value.denominator, prec=bits, rounding=rounding)


def format_binary(value: mpmath.mpf, bits: int) -> str:
    """
    Binary scientific notation with all `bits` significant digits.

    >>> format_binary(round_rational(Fraction(11, 10), 10, 'f'), 10)
    '1.000110011p+0'
    >>> format_binary(round_rational(Fraction(11, 10), 10, 'c'), 10)
    '1.000110100p+0'
    >>> format_binary(mpmath.mpf(-0.75), 4)
    '-1.100p-1'
    """
    if value == 0:
        return f'0.{"0" * (bits - 1)}p+0'
    sign = '-' if value < 0 else ''
    mantissa, exponent = abs(value).man_exp
    digits = bin(mantissa)[2:]
    if len(digits) > bits:
        raise ValueError(f'{value} needs {len(digits)} bits, more than {bits}')
    exponent += len(digits) - 1
    digits = digits.ljust(bits, '0')
    return f'{sign}{digits[0]}.{digits[1:]}p{exponent:+d}'
