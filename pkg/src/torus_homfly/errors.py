"""Exception hierarchy shared by every module."""


class TorusHomflyError(Exception):
    """Base class for all package errors."""


class NotPolynomial(TorusHomflyError, ArithmeticError):
    """A rational function that was expected to be a Laurent polynomial is not."""


class NotPalindromic(TorusHomflyError, ArithmeticError):
    """A Laurent polynomial fails the x -> 1/x symmetry it is supposed to have."""


class NonLaurent(TorusHomflyError, ArithmeticError):
    """A solved coefficient is not a Laurent polynomial in the expected variable."""


class DenominatorZero(TorusHomflyError, ZeroDivisionError):
    """A bracket in the denominator vanishes at the evaluation point."""


class SingularSystem(TorusHomflyError, ArithmeticError):
    pass


class SpectralCollision(TorusHomflyError, ArithmeticError):
    pass


class SizeMismatch(TorusHomflyError, ValueError):
    pass


class InvalidColors(TorusHomflyError, ValueError):
    pass


class NotCoprime(TorusHomflyError, ValueError):
    pass


class WrongColors(TorusHomflyError, ValueError):
    pass


class UsageError(TorusHomflyError, ValueError):
    pass
