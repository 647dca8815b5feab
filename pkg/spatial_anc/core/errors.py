"""Exception hierarchy shared by the library and the CLI."""
from typing import Iterable, Optional


class AncError(Exception):
    """Base exception for spatial ANC failures."""
    pass


class DomainError(AncError, ValueError):
    """Raised when an argument lies outside a function's domain."""
    pass


class NotPositiveDefiniteError(AncError):
    """Raised when a Cholesky factorization hits a non-positive pivot."""
    pass


class SingularMatrixError(AncError):
    """Raised when a system matrix cannot be inverted even after loading."""
    pass


class NumericalDivergenceError(AncError):
    """Raised when the control filter stops being finite."""

    def __init__(self, message: str, iteration: Optional[int] = None):
        super().__init__(message)
        self.iteration = iteration


class NoFeasibleLambdaError(AncError):
    """Raised when no penalty weight on the grid meets the radiation budget."""
    pass


class ConfigError(AncError):
    """Configuration parse or validation failure.

    ``problems`` holds one ``"section.key: message"`` string per offending key.
    """

    def __init__(self, message: str, problems: Iterable[str] = ()):
        self.problems = list(problems)
        if self.problems:
            message = message + "\n" + "\n".join(f"  - {p}" for p in self.problems)
        super().__init__(message)


class ArtifactWriteError(AncError):
    """Raised when an output artifact cannot be written."""

    def __init__(self, path, cause: Exception):
        super().__init__(f"Could not write {path}: {cause}")
        self.path = path
        self.cause = cause
