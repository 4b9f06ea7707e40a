"""Exception types shared across the package."""


class DistquotError(Exception):
    """Base class for all errors raised by this package."""


class NotOddPrime(DistquotError):
    """The characteristic must be an odd prime."""


class CapExceeded(DistquotError):
    """A field or grid would exceed the configured size cap."""


class DivisionByZero(DistquotError, ZeroDivisionError):
    """Multiplicative inverse of zero requested."""


class ClosedFormMismatch(DistquotError):
    """A directly computed sum disagrees with its closed form.

    Raised by the Gauss-sum check; signals corrupted character tables.
    """


class EvenDimension(DistquotError):
    """Operation requires an odd dimension."""


class OddDimension(DistquotError):
    """Operation requires an even dimension."""


class BelowThreshold(DistquotError):
    """Point set too small for the requested check's hypothesis."""


class EmptySet(DistquotError):
    """Operation requires a nonempty point set."""


class PointSetParseError(DistquotError):
    """Point-set file could not be parsed; message names the line."""
