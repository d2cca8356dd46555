"""Exception types shared across the package.

ConfigError signals a bad experiment description (CLI exit code 2); the
remaining exceptions signal numerical or domain failures (exit code 3).
"""


class CocycleLabError(Exception):
    """Base class for all package errors."""


class EmptySeries(CocycleLabError):
    """Operation requires a Fourier series with nonempty support."""


class NoFiniteConstant(CocycleLabError):
    """A decay constant cannot certify the series: some nonzero mode has
    amplitude >= 1, so no prefactor-free exponential bound exists."""


class DimensionMismatch(CocycleLabError):
    """Torus dimensions of the operands disagree."""


class NotUnimodular(CocycleLabError):
    """Matrix or cocycle determinant is not 1 within tolerance."""


class NonFinite(CocycleLabError):
    """A NaN or infinity appeared during evaluation or iteration."""


class BudgetExceeded(CocycleLabError):
    """A lattice enumeration or coefficient box exceeds the desk-scale budget."""


class RangeViolation(CocycleLabError):
    """Gevrey exponent outside the range where the deviation estimate is useful."""


class DiophantineFailure(CocycleLabError):
    """Frequency failed the requested resonance condition.

    Carries the offending scan report in ``self.report``.
    """

    def __init__(self, report, message=None):
        self.report = report
        if message is None:
            message = (
                f"frequency fails ||k.omega|| > kappa*|k|^-b at k={report.worst_k} "
                f"(||k.omega|| = {report.worst_value:.6g}, K0 = {report.k0})"
            )
        super().__init__(message)


class ConfigError(CocycleLabError):
    """Invalid experiment configuration; ``field`` names the offending key."""

    def __init__(self, field, message):
        self.field = field
        super().__init__(f"config field '{field}': {message}")
