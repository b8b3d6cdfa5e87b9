class QSeriesError(Exception):
    """Base class for errors raised by qmobius."""


class DomainError(QSeriesError, ValueError):
    """An argument lies outside the domain of the function."""


class DivisionByNonUnit(QSeriesError, ZeroDivisionError):
    """Division by a series whose constant term is zero."""


class LogOfNonOne(QSeriesError, ValueError):
    """Logarithm of a series whose constant term is not 1."""


class ExpOfNonZero(QSeriesError, ValueError):
    """Exponential of a series whose constant term is not 0."""


class OracleLimitExceeded(QSeriesError):
    """Brute-force enumeration was requested above the configured limit."""

    def __init__(self, n, limit):
        super().__init__(f"enumeration of partitions of {n} exceeds oracle limit {limit}")
        self.n = n
        self.limit = limit
