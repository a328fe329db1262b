"""
Exception types shared across the package
"""


class ConsistencyError(RuntimeError):
    """Raised when an exact computation contradicts a structural guarantee.

    Examples are a non-zero remainder in a division that must be exact, an
    elimination that does not terminate, or a nilpotent class surviving past
    the grading bound. These never produce partial results.
    """


class PayloadError(ValueError):
    """Raised when a JSON payload cannot be read or does not match its schema"""
