"""Exception types shared across the package."""


class CpshiftError(Exception):
    """Base class for all package-specific errors."""


class DomainError(CpshiftError, ValueError):
    """An argument is outside the supported domain."""


class PlaneLimitError(DomainError):
    """The half-plane angle is so small that the atom effectively faces an
    infinite plane; callers should use the plane-mirror functions instead."""


class ScaledOverflowError(CpshiftError, OverflowError):
    """A scaled Bessel value exceeds the double-precision range.

    Happens for K at large order and small argument, where even
    e^x K_m(x) ~ Gamma(m) (2/x)^m / 2 is not representable.
    """


class NaNIntegrandError(CpshiftError, ArithmeticError):
    """The integrand returned NaN.  Carries the offending abscissa."""

    def __init__(self, abscissa):
        self.abscissa = abscissa
        super().__init__(f"integrand returned NaN at x = {abscissa!r}")


class NonConvergenceError(CpshiftError, RuntimeError):
    """Quadrature or series summation failed to reach tolerance.

    Carries the best estimate and its error bound so callers can decide
    whether to accept a degraded result.
    """

    def __init__(self, message, best_estimate, error_estimate, evaluations=0):
        self.best_estimate = best_estimate
        self.error_estimate = error_estimate
        self.evaluations = evaluations
        super().__init__(f"{message} (best estimate {best_estimate!r}, "
                         f"error bound {error_estimate!r})")
