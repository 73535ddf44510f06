"""Exception types shared across the package."""


class AdeError(Exception):
    """Base class for all errors raised by this package."""


class UnsupportedDiagramError(AdeError):
    """(family, rank) does not name a supported diagram."""


class NoPositiveHypergroupError(AdeError):
    """The graph admits no fusion structure with nonnegative integer
    structure constants (E7 and the odd D diagrams)."""

    def __init__(self, family, rank, reason):
        self.family = family
        self.rank = rank
        self.reason = reason
        super().__init__(
            "no positive hypergroup for %s%d: %s" % (family, rank, reason))


class NotDefinedError(AdeError):
    """The requested structure is not defined for this family here."""


class LengthCapError(AdeError):
    """Requested path length exceeds the configured cap."""


class StructuralError(AdeError):
    """An internal consistency check failed (a bug, not a user error)."""
