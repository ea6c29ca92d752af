"""Exception hierarchy shared by all solver modules."""


class WavefrontError(Exception):
    """Base class for all errors raised by this package."""


class InvalidGeometry(WavefrontError):
    """Birth-function segments cannot form a valid unimodal graph."""


class NegativeInput(WavefrontError):
    """Birth functions are only defined for nonnegative states."""


class WindowTooCoarse(WavefrontError):
    """Real roots could not be separated at the resolution limit."""


class NoConvergence(WavefrontError):
    """Iteration exhausted its budget without meeting the tolerance."""


class NoTangency(WavefrontError):
    """Coarse scan found no transition in the real-root count."""


class NotInDomain(WavefrontError):
    """The requested (h, c) pair is outside the admissibility region."""


class BoundaryZero(WavefrontError):
    """A zero sits on the contour and perturbation did not clear it."""


class NotInvariant(WavefrontError):
    """An interval map does not send its domain into itself."""


class OutOfRange(WavefrontError):
    """A value left the range where an exact inverse is defined."""


class TailDivergence(WavefrontError):
    """Left tail rate is not positive; the tail integral diverges."""


class LossOfPositivity(WavefrontError):
    """A profile iterate went negative beyond the tolerance."""


class RegimeMismatch(WavefrontError):
    """Requested tail-fit regime conflicts with the spectrum."""


class Inconclusive(WavefrontError):
    """Grid resolution cannot separate consecutive zeros; no verdict."""


class StabilityViolation(WavefrontError):
    """PDE iterate exceeded the blow-up detector threshold."""


class FrontNotFormed(WavefrontError):
    """No level-set crossing exists in the simulation record."""
