"""Shared exception types."""


class RevmapError(Exception):
    """Base class for all errors raised by this package."""


class MalformedScriptError(RevmapError):
    """An edit script does not fit the sequence it is applied to."""


class MalformedDeltaError(RevmapError):
    """A delta cannot be applied to the current graph state."""


class IngestError(RevmapError):
    """A revision source is unreadable or malformed."""


class EmptyHistoryError(IngestError):
    """The source contains no revisions at all."""


class BundleError(RevmapError):
    """A viewer bundle cannot be read or written."""
