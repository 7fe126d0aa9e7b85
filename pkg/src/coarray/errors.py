"""Exception hierarchy shared by the library, CLI, and HTTP service.

Every error carries a stable machine-readable ``code`` so that the CLI and
the JSON service can emit one structured envelope per failure mode:
``{"code": ..., "message": ..., "detail": ...}``.
"""

from __future__ import annotations


class CoarrayError(Exception):
    """Base class for all domain and input errors raised by this package."""

    code = "COARRAY_ERROR"

    def __init__(self, message: str, detail: dict | None = None):
        super().__init__(message)
        self.message = message
        self.detail = detail or {}

    def envelope(self) -> dict:
        """Structured form used by the CLI (stderr) and the HTTP service."""
        out = {"code": self.code, "message": self.message}
        if self.detail:
            out["detail"] = self.detail
        return out


# --- input validation errors (HTTP 400) ------------------------------------

class InputError(CoarrayError):
    """Malformed or rejected user input."""

    code = "INVALID_INPUT"


class EmptyInput(InputError):
    code = "EMPTY_INPUT"


class DuplicatePositions(InputError):
    code = "DUPLICATE_POSITIONS"


class NegativePosition(InputError):
    code = "NEGATIVE_POSITION"


class NonIntegerPosition(InputError):
    code = "NON_INTEGER_POSITION"


class ApertureExceeded(InputError):
    code = "APERTURE_EXCEEDED"


class InvalidRequest(InputError):
    """Malformed request body, unknown fields, or bad query parameters."""

    code = "INVALID_REQUEST"


# --- domain errors (HTTP 422) -----------------------------------------------

class DomainError(CoarrayError):
    """Input parsed fine but the requested analysis is not defined for it."""

    code = "DOMAIN_ERROR"


class TooFewSensors(DomainError):
    code = "TOO_FEW_SENSORS"


class PositionNotInArray(DomainError):
    code = "POSITION_NOT_IN_ARRAY"


class NTooSmall(DomainError):
    code = "N_TOO_SMALL"


class InvalidRange(DomainError):
    code = "INVALID_RANGE"


class RangeNotContiguous(DomainError):
    code = "RANGE_NOT_CONTIGUOUS"


class RangeTooLarge(DomainError):
    code = "RANGE_TOO_LARGE"


class AngleOutOfRange(DomainError):
    code = "ANGLE_OUT_OF_RANGE"


class NoSurvivingSensors(DomainError):
    code = "NO_SURVIVING_SENSORS"


class EdgeSensorFailure(DomainError):
    code = "EDGE_SENSOR"


class RankDeficient(DomainError):
    code = "RANK_DEFICIENT"


class DegenerateCovariance(DomainError):
    code = "DEGENERATE_COVARIANCE"


class ResponseTooLarge(DomainError):
    code = "RESPONSE_TOO_LARGE"


def http_status(exc: CoarrayError) -> int:
    """HTTP status for an error: 400 for input errors, 422 for domain errors."""
    if isinstance(exc, InputError):
        return 400
    if isinstance(exc, DomainError):
        return 422
    return 500
