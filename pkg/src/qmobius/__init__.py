"""Exact truncated q-series and Möbius-inversion partition identities."""

from .errors import (
    DivisionByNonUnit,
    DomainError,
    ExpOfNonZero,
    LogOfNonOne,
    OracleLimitExceeded,
    QSeriesError,
)
from .fps import Series
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DivisionByNonUnit",
    "DomainError",
    "ExpOfNonZero",
    "LogOfNonOne",
    "OracleLimitExceeded",
    "QSeriesError",
    "Series",
]
