"""Exception types shared across the package."""


class InputError(ValueError):
    """Raised when an argument violates a documented precondition."""


class ConvergenceError(RuntimeError):
    """Raised when an iterative solver fails to converge.

    Carries the best iterate found so callers can inspect or report it.
    """

    def __init__(self, message, *, best=None, diagnostics=None):
        super().__init__(message)
        self.best = best
        self.diagnostics = diagnostics or {}


class SoundnessError(RuntimeError):
    """Raised when a computed value contradicts a proven bound.

    This always indicates a numerical bug, never new mathematics; the
    offending configuration is attached for diagnosis.
    """

    def __init__(self, message, *, configuration=None):
        super().__init__(message)
        self.configuration = configuration
