"""Exception types raised by the library.

All of them derive from :class:`ValueError` so callers that only care about
"bad input" can catch that.
"""


class ZipfError(ValueError):
    """Base class for every validation error raised here."""


class InvalidParams(ZipfError):
    pass


class AlphaNearOne(ZipfError):
    """The exponent sits inside the guard band around 1 where the closed forms are singular."""


class InvalidK(ZipfError):
    pass


class RankOutOfRange(ZipfError):
    pass


class InvalidProbability(ZipfError):
    pass


class EmptyGrid(ZipfError):
    pass
