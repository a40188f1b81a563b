"""Exception and warning types shared across the library."""


class QuadratureError(Exception):
    """Base class for numerical-integration failures."""


class NonFiniteError(QuadratureError):
    """An integrand or sampled function returned NaN or +/-inf."""


class BudgetExceededError(QuadratureError):
    """The subdivision budget was exhausted before reaching the tolerance."""


class OrderOverflowError(ValueError):
    """Requested construction order exceeds the documented cap."""


class TooManyLevelsError(ValueError):
    """More decomposition levels requested than the sample count supports."""


class DivergentError(ArithmeticError):
    """An improper integral diverges for the supplied input."""


class NonConvergentError(ArithmeticError):
    """Fixed-point iteration failed to settle within its budget."""


class InsufficientMomentsError(ValueError):
    """Kernel has fewer vanishing moments than the bound requires."""


class DegenerateFitError(ValueError):
    """Least-squares fit is undetermined (zero variance in the abscissae)."""


class UnknownNameError(KeyError):
    """Name not present in a registry of signals, kernels, or filters."""


class EmptyActiveSetWarning(UserWarning):
    """An evaluation point is covered by no kernel translate; result is 0."""


class TruncationWarning(UserWarning):
    """A truncated infinite sum left a non-negligible boundary contribution."""
