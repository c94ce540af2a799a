class DomainError(ValueError):
    """Argument outside the domain an operation is defined on."""


class InternalConsistencyError(ArithmeticError):
    """An exact division that must succeed did not."""


class TableInvariantError(AssertionError):
    """An assembled spectrum violated one of its aggregate identities."""
