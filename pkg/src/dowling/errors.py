"""Exception types raised across the package."""


class DowlingError(Exception):
    """Base class for every error raised by this package."""


class TagMismatch(DowlingError, TypeError):
    """Two polynomials in different formal variables were combined."""


class NonZeroRemainder(DowlingError, ArithmeticError):
    """A division asserted to be exact left a remainder."""


class DegreeTooLarge(DowlingError, ValueError):
    pass


class InsufficientEntries(DowlingError, ValueError):
    pass


class IndexBelowR(DowlingError, ValueError):
    pass


class TwoFormalVariables(DowlingError, ValueError):
    pass


class ZeroParameter(DowlingError, ValueError):
    pass


class NonzeroConstantTerm(DowlingError, ValueError):
    pass


class ConstantTermNotOne(DowlingError, ValueError):
    pass


class OrderExceeded(DowlingError, IndexError):
    pass


class IndexOutOfRange(DowlingError, IndexError):
    pass


class UnknownId(DowlingError, KeyError):
    pass


class DivisibilityFailure(DowlingError, ArithmeticError):
    """A value that must be divisible by n! was not.

    Carries the offending value so the caller can report it.
    """

    def __init__(self, message, value=None, modulus=None):
        super().__init__(message)
        self.value = value
        self.modulus = modulus


class NetworkUnavailable(DowlingError, ConnectionError):
    pass
