"""Exception hierarchy shared by every solitonforge module."""


class SolitonForgeError(Exception):
    """Base class for all library errors."""


class SingularPoint(SolitonForgeError, ArithmeticError):
    """An evaluation hit a pole or branch point of a closed form."""


class DegenerateCoefficient(SolitonForgeError, ValueError):
    pass


class NonRealCoefficient(SolitonForgeError, ValueError):
    pass


class ModulusOutOfRange(SolitonForgeError, ValueError):
    pass


class ToleranceNotMet(SolitonForgeError, ArithmeticError):
    def __init__(self, message, estimate=None, error=None):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


class SingularIntegrand(SolitonForgeError, ArithmeticError):
    pass


class QuadratureFailure(SolitonForgeError, ArithmeticError):
    pass


class DispersionViolated(SolitonForgeError, ValueError):
    pass


class DegenerateDenominator(SolitonForgeError, ZeroDivisionError):
    pass


class ConstraintViolated(SolitonForgeError, ValueError):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class SampleAtPole(SolitonForgeError, ValueError):
    pass


class InconsistentInitialData(SolitonForgeError, ValueError):
    pass


class StalledAtEquilibrium(SolitonForgeError, ValueError):
    pass


class DivisionByZero(SolitonForgeError, ZeroDivisionError):
    pass


class SingularityEncountered(SolitonForgeError, ArithmeticError):
    """Raised by the BT integrator; carries the blocking point and partial data."""

    def __init__(self, message, point=None, partial=None):
        super().__init__(message)
        self.point = point
        self.partial = partial


class StepSizeUnderflow(SingularityEncountered):
    pass


class AllPointsExcluded(SolitonForgeError, ValueError):
    pass


class NotReal(SolitonForgeError, ValueError):
    def __init__(self, message, imag=None):
        super().__init__(message)
        self.imag = imag


class SingularNeighborhood(SolitonForgeError, ArithmeticError):
    pass


class SchemaError(SolitonForgeError, ValueError):
    pass


class VerificationFailure(SolitonForgeError):
    """A candidate (F, G) pair whose bilinear residuals are not symbolically zero."""

    def __init__(self, message, residuals=None):
        super().__init__(message)
        self.residuals = residuals
