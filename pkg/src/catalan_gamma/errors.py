"""Exception types shared across the library."""


class DomainError(ValueError):
    """Argument lies outside the mathematical domain of an operation."""


class InvalidSpecError(ValueError):
    """An integrand bundle or tolerance violates the integrator contract."""


class NonFiniteEvaluationError(ArithmeticError):
    """An integrand returned NaN or an infinity at an interior node."""

    def __init__(self, t: float, value: float):
        self.t = t
        self.value = value
        super().__init__(f"integrand returned {value!r} at t={t!r}")


class NonConvergenceError(ArithmeticError):
    """Quadrature exhausted its evaluation budget above the requested tolerance."""


class LimitExceededError(ValueError):
    """An enumeration was requested beyond its desk-scale size cap."""


class NonIntegerResultError(ArithmeticError):
    """Exact rational arithmetic produced a non-integer where an integer is
    guaranteed; this always indicates an implementation bug, never bad input."""
