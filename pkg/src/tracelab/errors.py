"""Exception types shared across the verification modules."""


class VerificationError(Exception):
    """Base class for failures while computing one side of an identity."""


class DegenerateFixedPointError(VerificationError):
    """Sign of det(1 - T_x(phi^t sigma)) failed to stabilize near t = 0."""


class UndecidableSignError(VerificationError):
    """Interval evaluation straddles zero at maximal working precision."""


class PrecisionExhaustedError(VerificationError):
    """Root isolation or matching still ambiguous at maximal precision."""


class PeriodBoundExceededError(VerificationError):
    """Continued-fraction period not found within the iteration bound."""


class ConfigError(Exception):
    """Malformed case configuration.  Carries the offending line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
