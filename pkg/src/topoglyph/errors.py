"""Exception types shared across the package."""


class TopoglyphError(Exception):
    """Base class for all errors raised by this package."""


class PnmFormatError(TopoglyphError):
    """Malformed or unsupported portable bitmap/graymap input."""


class ConstantImageError(TopoglyphError):
    """All pixels share one intensity; no threshold separates classes."""


class EmptyImageError(TopoglyphError):
    """Operation requires at least one foreground pixel."""


class EmptySupportError(TopoglyphError):
    """Centroid of an empty pixel set is undefined."""


class SchemaError(TopoglyphError):
    """Serialized document violates the expected schema.

    The message carries a field-level diagnostic (which key, what was
    wrong) so callers can surface it directly.
    """


class EmptyStoreError(TopoglyphError):
    """Matching requires a training store with at least one entry."""
