"""Power structures over polynomial rings and Hilbert schemes of points."""

from ._core import *  # noqa: F401,F403
from ._core import ExpressionError, MotivicError, Polynomial, Ring, Series

__all__ = [name for name in dir() if not name.startswith("_")]
