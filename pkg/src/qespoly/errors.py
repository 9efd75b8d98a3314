"""Exception and warning types raised by :mod:`qespoly`."""


class QESError(Exception):
    """Base class for all library errors."""


class ParameterError(QESError, ValueError):
    """Invalid parameter record or argument."""


class RangeError(ParameterError, IndexError):
    """Index outside the admissible range (e.g. m > 2j)."""


class DegenerateParameterError(ParameterError):
    """The recurrence degenerates (qA^2 = 0 with upto > 1)."""


class SingularityError(QESError, ValueError):
    """Evaluation too close to a pole of the potential."""


class DomainError(QESError, ValueError):
    """Evaluation point outside the family's domain."""


class FitError(QESError):
    """Polynomial coefficients are not consistent with a QES sextic."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class GammaPoleError(QESError, ValueError):
    """A factorial/Gamma argument hits a pole."""


class NonNormalizableError(QESError):
    """Wavefunction does not decay at the ends of the integration grid."""


class ComplexPotentialError(QESError, TypeError):
    """Real-symmetric FD oracle requested for a complex potential."""


class NotConvergedError(QESError):
    """Two-grid estimates disagree by more than the requested tolerance."""


class StepUnderflowError(QESError):
    """Adaptive differencing could not reach the requested accuracy."""


class ComplexRootWarning(UserWarning):
    """A root of the critical polynomial has a non-negligible imaginary part."""


class OffShellWarning(UserWarning):
    """Coefficients requested at a value that is not a root of P_{2j+1}."""
