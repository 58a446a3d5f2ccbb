"""Exception types shared across the package."""

from __future__ import annotations


class CatalanOpsError(Exception):
    """Base class for all library-specific errors."""


class DomainError(CatalanOpsError, ValueError):
    """Argument lies outside the domain a function is defined on (e.g. |z| > 1/4)."""


class SingularityError(CatalanOpsError, ZeroDivisionError):
    """Evaluation requested exactly on the singular set of a closed form."""


class TriangleIndexError(CatalanOpsError, IndexError):
    """(n, k) outside the triangle."""


class TruncationMismatchError(CatalanOpsError, ValueError):
    """Two truncated sequences with different truncation orders were combined."""


class ConsistencyError(CatalanOpsError, ArithmeticError):
    """An exact internal identity failed (signals a bug, not bad input)."""


class NotCertifiedError(CatalanOpsError, RuntimeError):
    """Power-boundedness of 4T could not be certified."""


class DivergenceError(NotCertifiedError):
    """The scan of ||(4T)^n|| grew past the divergence cap."""


class NonConvergenceError(CatalanOpsError, RuntimeError):
    """A certified series truncation meeting the tolerance is out of reach."""


class IllConditionedError(CatalanOpsError, RuntimeError):
    """Eigendecomposition too ill-conditioned to trust."""


class FixtureNotFoundError(CatalanOpsError, LookupError):
    """No fixture for the requested sequence and network access disabled/failed."""


class BFileParseError(CatalanOpsError, ValueError):
    """Malformed b-file content."""


class AlignmentError(CatalanOpsError, ValueError):
    """No offset alignment matched the reference values."""
