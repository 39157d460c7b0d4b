"""
Exception hierarchy of all capverify computations.
"""


class CapVerifyError(Exception):
    pass


class InvalidInterval(CapVerifyError, ValueError):
    """Endpoints are NaN or not ordered."""


class DivisionByZeroInterval(CapVerifyError, ZeroDivisionError):
    """Divisor interval contains zero."""


class DomainViolation(CapVerifyError, ArithmeticError):
    """Argument leaves the domain of a function (sqrt < 0, tan poles, exp overflow, ...)."""


class BaseMismatch(CapVerifyError, ValueError):
    """Jet arithmetic between jets of different base or order."""


class NonOrderedBounds(CapVerifyError, ValueError):
    """Integration bounds with a > b."""


class CancellationOrderMismatch(CapVerifyError, ArithmeticError):
    pass


class PositivityCertificateFailed(CapVerifyError):
    pass


class CertificateFailed(CapVerifyError):
    pass


class BudgetExhausted(CapVerifyError):
    """
    The quadrature budget was used up before the tolerance was reached.
    The carried enclosure is still rigorous, just wider than requested.
    """

    def __init__(self, message: str, *, enclosure):
        super().__init__(message)
        self.enclosure = enclosure
