"""Exceptions shared across the package."""


class DomainError(ValueError):
    """An input lies outside the mathematical domain of an operation."""


class DegenerateSampleError(RuntimeError):
    """A simulated sample has zero variance and cannot be standardized."""
