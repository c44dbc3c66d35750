"""
Exception hierarchy shared by every module.

Input errors also derive from ValueError so callers that only catch
ValueError keep working.
"""

from typing import Optional


class LandauError(Exception):
    """Base class for all library errors."""


class InputError(LandauError, ValueError):
    """Malformed or out-of-range argument."""


class DomainError(InputError):
    """Argument outside the physical domain (negative radius, eta > 1, ...)."""


class SingularityError(LandauError, ArithmeticError):
    """Quantity is singular at the requested point."""


class ContractError(LandauError):
    """Caller violated a documented precondition."""


class NoBoundStateError(LandauError):
    """No bound states exist for these parameters (omega = 0)."""


class NotSupportedError(LandauError):
    """Requested case lies outside what the bound-state paths handle."""


class PoleError(LandauError, ArithmeticError):
    """Kummer function evaluated at a pole of its second parameter."""


class AccuracyError(LandauError, ArithmeticError):
    """Series failed to converge within its iteration cap."""


class TruncationError(LandauError):
    """Radial grid too short for the Gaussian tail."""


class ConstructionError(LandauError):
    """Spinor could not be built in the positive-energy regime."""


class OracleError(LandauError, RuntimeError):
    """Eigensolver produced an inconsistent spectrum."""


class ConfigError(InputError):
    """Configuration error naming the offending key."""

    def __init__(self, key: Optional[str], message: str):
        self.key = key
        prefix = f"{key}: " if key else ""
        super().__init__(f"{prefix}{message}")
