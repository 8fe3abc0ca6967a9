"""Exception types shared across planepart."""


class ResourceLimitError(ValueError):
    """Raised when a request exceeds the exhaustive generator's ceiling."""

    def __init__(self, n, ceiling):
        super().__init__(
            f"n={n} exceeds the generator ceiling ({ceiling}); "
            "raise the ceiling explicitly if you accept the runtime"
        )
        self.n = n
        self.ceiling = ceiling


class ConvergenceError(ArithmeticError):
    """A series or root search did not converge within its limits."""


class ZnOverflowError(OverflowError):
    """Z_N left the double-precision range during the recurrence."""

    def __init__(self, n):
        super().__init__(f"Z_N overflowed the floating range at N={n}")
        self.n = n


class SaddleError(ArithmeticError):
    """No usable stationary point of the entropy on the bracket."""
