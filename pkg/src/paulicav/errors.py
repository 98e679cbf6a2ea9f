"""Exception types shared across the package."""


class PaulicavError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(PaulicavError):
    """Invalid model data or inconsistent run parameters."""


class ComputeCapError(PaulicavError):
    """A requested computation exceeds the configured size cap."""
