"""Exception types shared across the package."""


class WallcrossError(Exception):
    """Base class for all package errors."""


class LatticeMismatchError(WallcrossError, ValueError):
    """Operands live in different charge lattices."""


class InvalidChargeError(WallcrossError, ValueError):
    """A charge is unusable for the requested operation (e.g. zero)."""


class OutsideConeError(WallcrossError, ValueError):
    """A lattice point does not lie in the positive cone."""


class ConeMismatchError(WallcrossError, ValueError):
    """Operands are built over different cones or truncations."""


class DegeneratePairingError(WallcrossError, ValueError):
    """The cone generators pair to zero; ordered factorization is not unique."""


class MalformedElementError(WallcrossError, ValueError):
    """Input is not a genuine truncated group element."""


class IndependenceError(WallcrossError, ValueError):
    """Charges required to be linearly independent are not."""


class CollidingRootsError(WallcrossError, RuntimeError):
    """Branch points collide; the moduli point is too close to the discriminant."""

    def __init__(self, message, min_gap=None):
        super().__init__(message)
        self.min_gap = min_gap


class PrecisionError(WallcrossError, RuntimeError):
    """A numerical routine could not reach its target tolerance."""

    def __init__(self, message, achieved=None):
        super().__init__(message)
        self.achieved = achieved


class ContinuationError(WallcrossError, RuntimeError):
    """Analytic continuation of a period frame failed."""


class FrameInvalidError(WallcrossError, RuntimeError):
    """A period frame violates a structural requirement (e.g. Im tau > 0)."""


class StepFailureError(WallcrossError, RuntimeError):
    """The flow integrator could not complete a step."""

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point
