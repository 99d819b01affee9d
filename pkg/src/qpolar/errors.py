"""Exception types shared across the package."""


class QPolarError(ValueError):
    """Base class for all qpolar errors."""


class DimensionMismatch(QPolarError):
    """Operands live over different qubit counts."""


class ZeroVectorError(QPolarError):
    """The zero vector was used where a point of the space is required."""


class IdentityWordError(QPolarError):
    """The all-identity Pauli word was used where a non-identity operator is required."""


class CapacityError(QPolarError):
    """An enumeration or oracle was requested above its supported size cap."""


class NotABasisError(QPolarError):
    """The supplied field elements do not form a basis."""


class DomainError(QPolarError):
    """Structured input violates an operation's precondition (e.g. not isotropic, not a generator)."""
