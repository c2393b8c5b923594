"""Exception hierarchy shared across the model modules."""


class CelleconError(Exception):
    """Base class for every error raised by the toolkit."""


class DomainError(CelleconError, ValueError):
    """An input lies outside the domain of the operation."""


class UnsupportedParameterError(DomainError):
    pass


class QuadratureError(CelleconError):
    """Adaptive integration did not reach the requested tolerance.

    The best estimate obtained so far is kept on the exception so callers
    can decide whether it is good enough.
    """

    def __init__(self, message, estimate, error_estimate, subdivisions):
        super().__init__(message)
        self.estimate = estimate
        self.error_estimate = error_estimate
        self.subdivisions = subdivisions


class OverloadError(DomainError):
    """Demanded traffic exceeds the deployed capacity."""

    def __init__(self, demand, capacity):
        super().__init__(
            f"demand {demand:g} Mbit/s/km2 exceeds area capacity {capacity:g} Mbit/s/km2"
        )
        self.demand = demand
        self.capacity = capacity


class ParseError(CelleconError, ValueError):
    def __init__(self, message, path=None, line=None):
        where = ""
        if path is not None:
            where = f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
        self.path = path
        self.line = line


class SingularFitError(CelleconError):
    """The regression design matrix is rank deficient."""


class ValidationError(DomainError):
    pass


class ConfigError(CelleconError):
    """Invalid scenario configuration; ``key`` names the offending entry."""

    def __init__(self, key, message):
        super().__init__(f"{key}: {message}")
        self.key = key


class ReportError(CelleconError):
    """One or more tables failed; ``failures`` holds (table, message) pairs."""

    def __init__(self, failures):
        self.failures = list(failures)
        super().__init__("; ".join(f"{table}: {msg}" for table, msg in self.failures))
