"""Lefschetz fibration factorizations, signatures and slopes."""

from ._slopeforge import *  # noqa: F401,F403
from ._slopeforge import (  # noqa: F401
    SlopeforgeError,
    ParseError,
    GenusMismatch,
    RangeError,
    NotTrivialError,
    SubstitutionMismatch,
    DivisibilityError,
    SearchExhausted,
)

__version__ = "0.1.0"
