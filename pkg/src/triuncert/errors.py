"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Operands have incompatible or invalid dimensions."""


class DomainError(ValueError):
    """A value violates a mathematical precondition (not a PSD state, bad range, ...)."""
