"""Exception types raised on malformed input data.

Everything here derives from :class:`DataError` so callers (and the CLI,
which maps them to exit code 2) can catch bad-input problems with a single
except clause while still telling the individual failure modes apart.
"""


class DataError(ValueError):
    """Base class for all bad-input errors."""


class MissingHeaderError(DataError):
    """CSV source contains no header row at all."""


class EmptyBodyError(DataError):
    """CSV source has a header but no data rows."""


class RaggedRowError(DataError):
    """A CSV data row has a different number of fields than the header."""


class UnknownLevelError(DataError):
    """A condition value is outside the closed level vocabulary."""


class UnknownDecisionError(DataError):
    """A decision value is outside the closed decision vocabulary."""


class UnknownAttributeError(DataError):
    """An attribute name does not exist in the table."""


class InconsistentTableError(DataError):
    """The table has rows with equal conditions but different decisions."""


class SchemaMismatchError(DataError):
    """Two tables that must share a schema do not."""


class RuleFormatError(DataError):
    """A rule file or rule object is structurally invalid."""


class MissingAttributeError(DataError):
    """An object to classify lacks an attribute referenced by the rules."""


class AttributeLimitError(DataError):
    """Exhaustive reduct search refused: too many condition attributes."""
