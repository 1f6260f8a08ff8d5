"""Exception hierarchy.

Input errors (bad text, violated preconditions) derive from ``InputError``
and map to CLI exit code 2; failures of a computation on valid input derive
from ``ComputationError`` and map to exit code 3.
"""


class SingresError(Exception):
    pass


class InputError(SingresError, ValueError):
    pass


class ComputationError(SingresError, ArithmeticError):
    pass


# -- arithmetic ---------------------------------------------------------------

class NonCoprime(InputError):
    pass


class RangeError(InputError):
    pass


class NotInvertible(InputError):
    pass


# -- polynomials --------------------------------------------------------------

class PolySyntaxError(InputError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownVariable(InputError):
    pass


class ZeroPolynomial(InputError):
    pass


class NotUnitary(InputError):
    pass


class NotSquarefree(InputError):
    pass


NotReduced = NotSquarefree


class NotThroughOrigin(InputError):
    pass


class InconsistentInput(InputError):
    pass


# -- graphs -------------------------------------------------------------------

class UnknownVertex(InputError):
    pass


class NotSymmetric(InputError):
    pass


class MissingDecoration(InputError):
    pass


# -- computation failures -----------------------------------------------------

class IrrationalCoefficient(ComputationError):
    """A Newton-Puiseux step needs a root outside the rationals.

    ``polynomial`` holds the univariate factor (coefficients, constant term
    first) whose roots are not rational.
    """

    def __init__(self, message, polynomial=None):
        super().__init__(message)
        self.polynomial = polynomial


class IrrationalCenter(IrrationalCoefficient):
    pass


class TruncationInsufficient(ComputationError):
    pass


class UnsupportedCovering(ComputationError):
    pass


class UnsupportedContraction(ComputationError):
    pass


class InternalInconsistency(ComputationError):
    pass
