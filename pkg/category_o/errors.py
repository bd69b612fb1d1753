"""
Exception types raised by the toolkit.

Every error carries a stable machine-readable ``code`` so the CLI can emit a
structured error object instead of a partial result.
"""

from typing import Any, Dict, Optional


class CategoryOError(Exception):
    """Base class for all toolkit errors."""

    code = "domain_error"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        return {"code": self.code, "message": self.message, "details": self.details}


class InvalidCartanTypeError(CategoryOError, ValueError):
    code = "invalid_cartan_type"


class WeightError(CategoryOError, ValueError):
    """Basis mismatch, non-integral or non-dominant weight."""

    code = "invalid_weight"


class NotARootError(CategoryOError, ValueError):
    code = "not_a_root"


class ParabolicError(CategoryOError, ValueError):
    """Parabolic subsets that are not nested as required."""

    code = "invalid_parabolic"


class BoundExceededError(CategoryOError):
    code = "bound_exceeded"


class WindowTooShallowError(CategoryOError):
    code = "window_too_shallow"


class ConsistencyError(CategoryOError):
    """An internal invariant failed; this signals a bug."""

    code = "internal_consistency"


class CacheError(CategoryOError):
    code = "cache_error"
