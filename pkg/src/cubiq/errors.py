"""
Errors
Exception hierarchy raised by the cubiq library and reported by the CLI
"""


class CubiqError(Exception):
    """Base class for every domain error raised by cubiq."""


class ZeroDivisorError(CubiqError, ZeroDivisionError):
    """Division by a zero Gaussian integer or quaternion."""


class InvalidInput(CubiqError, ValueError):
    """An argument violates an operation's precondition."""


class NoDivisor(CubiqError):
    """The prime does not divide the norm, so no divisor of that norm exists."""


class PDividesAlpha(CubiqError):
    """The prime divides the quaternion itself, so its norm-p divisor is not unique."""


class NotIcube(CubiqError):
    """Matrix columns are not nonzero, pairwise orthogonal and of equal norm."""


class NotTwins(CubiqError):
    """Two vectors are not orthogonal with equal nonzero norm."""


class NotExtendable(CubiqError):
    """A twin pair whose common length is irrational cannot be extended to an icube."""


class NotPrimitive(CubiqError):
    """The operation needs a primitive vector or quaternion."""


class NotSquarefree(CubiqError):
    """The operation needs a squarefree integer."""


class NotNormalForm(CubiqError):
    """A Pythagorean quadruple is not in normal form.

    Args:
        condition: the normal-form condition that failed
    """

    def __init__(self, condition):
        super().__init__(f"quadruple not in normal form: {condition}")
        self.condition = condition


class BudgetExceeded(CubiqError):
    """An enumeration would exceed its configured budget."""


class ConfigError(CubiqError):
    """The environment holds a malformed configuration value."""
