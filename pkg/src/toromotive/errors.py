"""Exception hierarchy.

Every domain error derives from :class:`ToromotiveError`; the CLI maps these
to exit code 1 and reports ``type(exc).__name__`` as the error kind.
"""


class ToromotiveError(Exception):
    """Base class for domain errors."""


class InvalidRank(ToromotiveError):
    pass


class GroupTooLarge(ToromotiveError):
    pass


class DimensionMismatch(ToromotiveError):
    pass


class ZeroVector(ToromotiveError):
    pass


class NotFullDimensional(ToromotiveError):
    pass


class NotSmooth(ToromotiveError):
    pass


class NotComplete(ToromotiveError):
    pass


class MalformedFan(ToromotiveError):
    pass


class RayOutsideSupport(ToromotiveError):
    pass


class NotRefinement(ToromotiveError):
    pass


class FanNotAdmissible(ToromotiveError):
    def __init__(self, field, report=None):
        super().__init__(f"fan is not admissible: {field} is false")
        self.field = field
        self.report = report


class NotPrime(ToromotiveError):
    pass


class BadDegree(ToromotiveError):
    pass


class NotDecomposable(ToromotiveError):
    pass
