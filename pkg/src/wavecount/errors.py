"""Exception hierarchy shared by all wavecount modules."""


class WavecountError(Exception):
    """Base class for every error raised by the package."""


class NotCoprime(WavecountError, ValueError):
    pass


class PreconditionViolated(WavecountError, ValueError):
    pass


class LengthMismatch(WavecountError, ValueError):
    pass


class InsufficientConstants(WavecountError, ValueError):
    pass


class ArityMismatch(WavecountError, ValueError):
    pass


class DegenerateDegree(WavecountError, ValueError):
    pass


class UnknownTiling(WavecountError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class MissingAxisOrders(WavecountError, ValueError):
    pass


class DimensionUnsupported(WavecountError, ValueError):
    pass


class CatalogError(WavecountError, RuntimeError):
    """A catalog tiling failed its Molien self-check."""


class OracleMismatch(WavecountError, AssertionError):
    """Two independent computation routes disagreed."""
