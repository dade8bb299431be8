"""Exception hierarchy. Every domain failure derives from MinRankError."""


class MinRankError(Exception):
    kind = "MinRankError"

    def __init__(self, detail: str = ""):
        super().__init__(detail)
        self.detail = detail

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        cls.kind = cls.__name__


class UnknownType(MinRankError, ValueError):
    pass


class NotDominant(MinRankError, ValueError):
    pass


class GroupTooLarge(MinRankError):
    pass


class DatumMismatch(MinRankError, ValueError):
    pass


class UnsupportedSpace(MinRankError, ValueError):
    pass


class AdjacentOrbit(MinRankError, ValueError):
    pass


class RealOrNoncompactStep(MinRankError):
    pass


class BruteForceTooLarge(MinRankError):
    pass


class SearchExhausted(MinRankError):
    pass


class NegativeMultiplicity(MinRankError):
    pass
