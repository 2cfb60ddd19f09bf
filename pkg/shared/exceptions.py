#!/usr/bin/env python3
"""
Custom exception classes for the lattice-mobius engine

Provides domain-specific exceptions with error codes, severity-aware
logging, and a standardized dictionary format for reports.
"""

from datetime import datetime, timezone
from enum import Enum
from typing import Any, Dict, Optional, Sequence

from shared.utils import setup_logger


class ErrorSeverity(str, Enum):
    """Error severity levels"""

    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"
    CRITICAL = "critical"


class ErrorCategory(str, Enum):
    """Error categories for classification"""

    VALIDATION = "validation"
    STRUCTURE = "structure"
    CAPACITY = "capacity"
    PARSING = "parsing"
    PRECONDITION = "precondition"
    ENUMERATION = "enumeration"
    VERIFICATION = "verification"
    USAGE = "usage"
    CONFIGURATION = "configuration"
    SYSTEM = "system"


class BaseLatticeError(Exception):
    """Base exception class for all lattice engine errors"""

    def __init__(
        self,
        message: str,
        error_code: str = "UNKNOWN_ERROR",
        severity: ErrorSeverity = ErrorSeverity.MEDIUM,
        category: ErrorCategory = ErrorCategory.SYSTEM,
        details: Optional[Dict[str, Any]] = None,
        cause: Optional[Exception] = None,
    ):
        super().__init__(message)
        self.message = message
        self.error_code = error_code
        self.severity = severity
        self.category = category
        self.details = details or {}
        self.cause = cause
        self.timestamp = datetime.now(timezone.utc)

        # Log the error automatically
        self._log_error()

    def _log_error(self) -> None:
        """Log the error with appropriate level based on severity"""
        logger = setup_logger(self.__class__.__module__)
        fields: Dict[str, Any] = {"error_code": self.error_code, "category": self.category.value}
        if self.details:
            fields["details"] = self.details
        if self.cause:
            fields["cause"] = repr(self.cause)

        if self.severity == ErrorSeverity.CRITICAL:
            logger.critical(self.message, **fields)
        elif self.severity == ErrorSeverity.HIGH:
            logger.error(self.message, **fields)
        elif self.severity == ErrorSeverity.MEDIUM:
            logger.warning(self.message, **fields)
        else:
            logger.info(self.message, **fields)

    def to_dict(self) -> Dict[str, Any]:
        """Convert error to standardized dictionary format"""
        return {
            "success": False,
            "error": {
                "code": self.error_code,
                "message": self.message,
                "severity": self.severity.value,
                "category": self.category.value,
                "details": self.details,
                "timestamp": self.timestamp.isoformat(),
            },
        }

    def __str__(self) -> str:
        return f"[{self.error_code}] {self.message}"


class LatticeSystemError(BaseLatticeError):
    """General engine errors"""

    def __init__(self, message: str, **kwargs):
        kwargs.setdefault("error_code", "LATTICE_SYSTEM_ERROR")
        kwargs.setdefault("category", ErrorCategory.SYSTEM)
        super().__init__(message=message, **kwargs)


# Structure errors
class LatticeStructureError(BaseLatticeError):
    """The input does not have the required order structure"""

    def __init__(self, message: str, **kwargs):
        kwargs.setdefault("error_code", "LATTICE_STRUCTURE_ERROR")
        kwargs.setdefault("category", ErrorCategory.STRUCTURE)
        kwargs.setdefault("severity", ErrorSeverity.LOW)
        super().__init__(message=message, **kwargs)


class NotALatticeError(LatticeStructureError):
    """Some pair lacks a unique join or meet"""

    def __init__(self, message: str, pair: Optional[Sequence[int]] = None, bound: Optional[str] = None, **kwargs):
        details = kwargs.get("details", {})
        if pair is not None:
            details["pair"] = list(pair)
        if bound:
            details["bound"] = bound
        kwargs["details"] = details
        kwargs.setdefault("error_code", "NOT_A_LATTICE")
        super().__init__(message, **kwargs)
        self.pair = tuple(pair) if pair is not None else None


class NoBoundedExtremesError(NotALatticeError):
    """No unique minimum or maximum"""

    def __init__(self, message: str, **kwargs):
        kwargs.setdefault("error_code", "NO_BOUNDED_EXTREMES")
        super().__init__(message, **kwargs)


class CycleDetectedError(LatticeStructureError):
    """A relation that should be acyclic contains a cycle"""

    def __init__(self, message: str, cycle: Optional[Sequence[Any]] = None, **kwargs):
        details = kwargs.get("details", {})
        if cycle is not None:
            details["cycle"] = list(cycle)
        kwargs["details"] = details
        kwargs.setdefault("error_code", "CYCLE_DETECTED")
        super().__init__(message, **kwargs)
        self.cycle = list(cycle) if cycle is not None else None


class NotComparableError(LatticeStructureError):
    """Interval endpoints are not comparable"""

    def __init__(self, message: str, lo: Any = None, hi: Any = None, **kwargs):
        details = kwargs.get("details", {})
        details.update({"lo": lo, "hi": hi})
        kwargs["details"] = details
        kwargs.setdefault("error_code", "NOT_COMPARABLE")
        super().__init__(message, **kwargs)


class CapacityExceededError(BaseLatticeError):
    """A size guard was exceeded"""

    def __init__(self, message: str, current_value: int, limit: int, **kwargs):
        details = kwargs.get("details", {})
        details.update({"current_value": current_value, "limit": limit})
        kwargs["details"] = details
        kwargs.setdefault("error_code", "CAPACITY_EXCEEDED")
        kwargs.setdefault("severity", ErrorSeverity.MEDIUM)
        super().__init__(message=message, category=ErrorCategory.CAPACITY, **kwargs)


# Validation errors
class ValidationError(BaseLatticeError):
    """Input validation errors"""

    def __init__(self, message: str, field: Optional[str] = None, value: Any = None, **kwargs):
        details = kwargs.get("details", {})
        if field:
            details["field"] = field
        if value is not None:
            details["invalid_value"] = str(value)
        kwargs["details"] = details
        kwargs.setdefault("error_code", "VALIDATION_ERROR")
        kwargs.setdefault("category", ErrorCategory.VALIDATION)
        kwargs.setdefault("severity", ErrorSeverity.LOW)
        super().__init__(message, **kwargs)


class EmptySetError(ValidationError):
    """An operation requiring a nonempty atom set received an empty one"""

    def __init__(self, message: str, **kwargs):
        kwargs.setdefault("error_code", "EMPTY_SET")
        super().__init__(message, **kwargs)


class InvalidBracketVectorError(ValidationError):
    """A sequence is not a left bracket vector"""

    def __init__(self, message: str, **kwargs):
        kwargs.setdefault("error_code", "INVALID_BRACKET_VECTOR")
        super().__init__(message, **kwargs)


class NotSameNError(ValidationError):
    """Compositions or partitions of different integers were combined"""

    def __init__(self, message: str, **kwargs):
        kwargs.setdefault("error_code", "NOT_SAME_N")
        super().__init__(message, **kwargs)


class InvalidSelectorError(ValidationError):
    """An atom selector violates its invariants"""

    def __init__(self, message: str, **kwargs):
        kwargs.setdefault("error_code", "INVALID_SELECTOR")
        super().__init__(message, **kwargs)


class UsageError(ValidationError):
    """Command-line usage errors"""

    def __init__(self, message: str, **kwargs):
        kwargs.setdefault("error_code", "USAGE_ERROR")
        kwargs.setdefault("category", ErrorCategory.USAGE)
        super().__init__(message, **kwargs)


class LatticeFormatError(BaseLatticeError):
    """Malformed lattice or atom-order text"""

    def __init__(self, message: str, line_number: Optional[int] = None, line: Optional[str] = None, **kwargs):
        details = kwargs.get("details", {})
        if line_number is not None:
            details["line_number"] = line_number
        if line is not None:
            details["line"] = line
        kwargs["details"] = details
        kwargs.setdefault("error_code", "LATTICE_FORMAT_ERROR")
        kwargs.setdefault("severity", ErrorSeverity.LOW)
        super().__init__(message=message, category=ErrorCategory.PARSING, **kwargs)


# Precondition errors
class PreconditionError(BaseLatticeError):
    """A documented precondition does not hold"""

    def __init__(self, message: str, **kwargs):
        kwargs.setdefault("error_code", "PRECONDITION_FAILED")
        kwargs.setdefault("category", ErrorCategory.PRECONDITION)
        kwargs.setdefault("severity", ErrorSeverity.LOW)
        super().__init__(message=message, **kwargs)


class PreconditionNotVerifiedError(PreconditionError):
    """A check that must run first was not run"""

    def __init__(self, message: str, **kwargs):
        kwargs.setdefault("error_code", "PRECONDITION_NOT_VERIFIED")
        super().__init__(message, **kwargs)


class ConditionCprimeViolatedError(PreconditionError):
    """A circuit C has a join different from that of C minus its first atom"""

    def __init__(self, message: str, circuit: Optional[Sequence[int]] = None, **kwargs):
        details = kwargs.get("details", {})
        if circuit is not None:
            details["circuit"] = list(circuit)
        kwargs["details"] = details
        kwargs.setdefault("error_code", "CONDITION_CPRIME_VIOLATED")
        super().__init__(message, **kwargs)
        self.circuit = tuple(circuit) if circuit is not None else None


# Enumeration errors
class PerfectOrderBudgetExhaustedError(BaseLatticeError):
    """The perfect-order search stopped at its candidate budget"""

    def __init__(self, message: str, budget: int, tried: int, **kwargs):
        details = kwargs.get("details", {})
        details.update({"budget": budget, "tried": tried})
        kwargs["details"] = details
        kwargs.setdefault("error_code", "BUDGET_EXHAUSTED")
        kwargs.setdefault("severity", ErrorSeverity.LOW)
        super().__init__(message=message, category=ErrorCategory.ENUMERATION, **kwargs)


# Verification errors
class MobiusInvariantError(BaseLatticeError):
    """A Möbius vector violates the Kronecker-sum identity"""

    def __init__(self, message: str, element: Optional[int] = None, **kwargs):
        details = kwargs.get("details", {})
        if element is not None:
            details["element"] = element
        kwargs["details"] = details
        kwargs.setdefault("error_code", "MOBIUS_INVARIANT_VIOLATED")
        kwargs.setdefault("severity", ErrorSeverity.CRITICAL)
        super().__init__(message=message, category=ErrorCategory.VERIFICATION, **kwargs)


class MethodDisagreementError(BaseLatticeError):
    """A Möbius method disagrees with the recursive oracle"""

    def __init__(self, message: str, method: str, element: int, value: int, expected: int, **kwargs):
        details = kwargs.get("details", {})
        details.update({"method": method, "element": element, "value": value, "expected": expected})
        kwargs["details"] = details
        kwargs.setdefault("error_code", "METHOD_DISAGREEMENT")
        kwargs.setdefault("severity", ErrorSeverity.CRITICAL)
        super().__init__(message=message, category=ErrorCategory.VERIFICATION, **kwargs)


class ConfigurationError(BaseLatticeError):
    """Configuration errors"""

    def __init__(self, message: str, **kwargs):
        kwargs.setdefault("error_code", "CONFIGURATION_ERROR")
        kwargs.setdefault("severity", ErrorSeverity.HIGH)
        super().__init__(message=message, category=ErrorCategory.CONFIGURATION, **kwargs)


# Error handling utilities
def handle_error(
    error: Exception, context: str = "", reraise: bool = True, default_response: Optional[Dict[str, Any]] = None
) -> Dict[str, Any]:
    """
    Centralized error handling utility

    Args:
        error: The exception to handle
        context: Additional context for logging
        reraise: Whether to reraise the exception
        default_response: Default response if not reraising

    Returns:
        Standardized error response dict
    """
    if isinstance(error, BaseLatticeError):
        if reraise:
            raise error
        return error.to_dict()

    wrapped = LatticeSystemError(
        message=f"Unexpected error in {context}: {error}" if context else str(error),
        details={"original_error_type": type(error).__name__, "context": context},
        cause=error,
    )
    if reraise:
        raise wrapped from error
    return wrapped.to_dict() or default_response or {}


def validate_numeric_range(
    value: float, min_value: Optional[float] = None, max_value: Optional[float] = None, field_name: str = "value"
) -> None:
    """
    Validate that a numeric value is within specified range

    Args:
        value: Value to validate
        min_value: Minimum allowed value (inclusive)
        max_value: Maximum allowed value (inclusive)
        field_name: Name of the field being validated

    Raises:
        ValidationError: If value is outside the specified range
    """
    if min_value is not None and value < min_value:
        raise ValidationError(
            f"{field_name} must be at least {min_value}",
            field=field_name,
            value=value,
            details={"min_value": min_value, "max_value": max_value},
        )

    if max_value is not None and value > max_value:
        raise ValidationError(
            f"{field_name} must be at most {max_value}",
            field=field_name,
            value=value,
            details={"min_value": min_value, "max_value": max_value},
        )


def check_capacity(value: int, limit: int, what: str) -> None:
    """
    Raise CapacityExceededError when ``value`` is above ``limit``

    Args:
        value: Requested size or parameter
        limit: Largest accepted value
        what: Human-readable name of the guarded quantity
    """
    if value > limit:
        raise CapacityExceededError(f"{what} {value} exceeds the limit of {limit}", current_value=value, limit=limit)
