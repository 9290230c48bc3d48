"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """Raised when an operand violates a documented precondition."""


class BudgetExceededError(RuntimeError):
    """Raised when a computation would exceed its documented work budget."""


class SchemaError(InvalidInputError):
    """Raised when an input document fails schema validation."""
