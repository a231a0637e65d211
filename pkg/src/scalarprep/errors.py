"""Exception types shared across the package."""


class DomainError(ValueError):
    """A parameter lies outside the physically valid domain."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed the configured memory guard."""


class ContractError(ValueError):
    """An input violates a structural precondition (wrong table shape, size mismatch)."""
