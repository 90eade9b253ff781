class PseudoLindleyError(Exception):
    """Base class for every error raised by pseudo_lindley."""
    pass

class DomainError(PseudoLindleyError, ValueError):
    """Raised when an argument lies outside the domain of an operation."""
    pass

class ConvergenceError(PseudoLindleyError):
    """Raised when the quantile bracketing or bisection runs out of iterations."""
    pass

class DegenerateSampleError(PseudoLindleyError):
    """Raised when a sample has mean² ≤ variance, so the moment estimators do not exist."""
    pass

class SingularCovarianceError(PseudoLindleyError):
    """Raised when the asymptotic covariance matrix is too ill-conditioned to invert."""
    pass

class ConfigError(PseudoLindleyError, ValueError):
    """Raised when a simulation configuration violates its invariants."""
    pass

class DataFileError(DomainError):
    """Raised when a data file cannot be parsed; the message names the offending line."""

    def __init__(self, path: str, line: int, reason: str):
        self.path = path
        self.line = line
        self.reason = reason
        super().__init__(f"{path}:{line}: {reason}")
