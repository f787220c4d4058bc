"""Exception types shared across the package."""


class DensetopError(Exception):
    """Base class for every error raised by densetop."""


class NotATopology(DensetopError, ValueError):
    """A family of subsets failed the open-set axioms.

    ``reason`` is one of ``missing-empty``, ``missing-full``,
    ``union-escape`` or ``intersection-escape``; for the escape reasons
    ``pair`` holds the two offending sets as sorted tuples.
    """

    def __init__(self, reason: str, pair: tuple | None = None):
        self.reason = reason
        self.pair = pair
        detail = reason if pair is None else f"{reason}({list(pair[0])}, {list(pair[1])})"
        super().__init__(detail)


class NotAPreorder(DensetopError, ValueError):
    pass


class NotAGroup(DensetopError, ValueError):
    pass


class OutOfCarrier(DensetopError, ValueError):
    pass


class CapExceeded(DensetopError):
    """A request exceeded a size cap; raised instead of truncating."""


class NotLocallyDC(DensetopError):
    """The space is not locally dense-connected, so DC components are undefined."""


class UnknownTheorem(DensetopError, KeyError):
    pass


class UnknownClaim(DensetopError, KeyError):
    pass


class NotExpressible(DensetopError):
    """A symbolic result falls outside the descriptor algebra."""
