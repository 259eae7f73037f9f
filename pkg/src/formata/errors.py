"""Error taxonomy shared by every module in the package."""


class FormataError(Exception):
    """Base class for all errors raised deliberately by this package."""


class CycleParseError(FormataError, ValueError):
    """Malformed cycle notation, group file, or formation name."""


class CapacityError(FormataError):
    """Group order exceeds the configured bound (FORMATA_MAX_ORDER)."""


class DomainError(FormataError, ValueError):
    """Arguments violate a documented precondition of the operation."""


class UnsupportedGroupError(FormataError):
    """Operation is only defined for solvable groups or supported formations."""


class InternalInconsistencyError(FormataError):
    """A certified internal invariant failed; this always indicates a bug."""


class NoStrongSeriesError(FormataError):
    """No strong pair series ends at the given character on the given series."""


class CatalogIntegrityError(FormataError):
    """A built-in group failed its frozen structural self-checks."""
