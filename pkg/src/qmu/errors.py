"""Exception types shared across the package."""


class QmuError(Exception):
    """Base class for all qmu errors."""


class DomainError(QmuError):
    """Input outside the function's domain (e.g. |q| >= 1, x = 0)."""


class PoleHit(QmuError):
    """Input too close to a pole or an excluded lattice point."""


class Divergent(QmuError):
    """Series terms grew persistently; the sum does not converge here."""


class BudgetExceeded(QmuError):
    """Term budget exhausted before the settle criterion was met."""


class DuplicateName(QmuError):
    """Two identity cases registered under the same name."""


class UnknownIdentity(QmuError):
    """Requested identity name not present in the registry."""
