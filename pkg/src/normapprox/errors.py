"""Shared exception types."""


class DomainError(ValueError):
    """An argument fell outside the stated domain of an operation."""
