"""Exception hierarchy shared by the whole package."""


class EvidenceError(ValueError):
    """Base class for every error this package raises on bad input."""


class FrameError(EvidenceError):
    """Frame construction failed, a label is unknown, or frames are mixed."""


class MassError(EvidenceError):
    """A mass or probability assignment violates its constraints."""


class DomainError(EvidenceError):
    """An operation precondition is violated by otherwise valid values.

    Examples: Dempster's rule applied to open-world inputs or under total
    conflict, the pignistic transform of a mass function whose entire mass
    sits on the empty set, an out-of-range conflict threshold, a sweep step
    that does not divide 1.
    """


class DocumentError(EvidenceError):
    """An evidence document failed to parse or validate.

    The message carries location context: JSON line/column for syntax
    errors, the body id and field path for semantic ones.
    """
