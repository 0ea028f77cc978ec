"""Exception hierarchy shared across the package."""


class LatLabError(Exception):
    """Base class for all latlab errors."""


class NotALattice(LatLabError):
    """The given order is not a (bounded) lattice.

    Carries the offending pair and whether the lub or glb failed.
    """

    def __init__(self, x, y, reason):
        self.pair = (x, y)
        self.reason = reason  # "lub" or "glb"
        super().__init__(f"no unique {reason} for elements {x} and {y}")


class CyclicCovers(LatLabError):
    pass


class IndexOutOfRange(LatLabError):
    pass


class NotComparable(LatLabError):
    pass


class SizeGuardExceeded(LatLabError):
    pass


class SearchBudgetExceeded(LatLabError):
    pass


class BudgetExceeded(LatLabError):
    pass


class TrivialLattice(LatLabError):
    pass


class ParentMismatch(LatLabError):
    pass


class BadIso(LatLabError):
    pass


class BadChoice(LatLabError):
    pass


class SamePrime(LatLabError):
    pass


class NotPrime(LatLabError):
    pass


class PointMismatch(LatLabError):
    pass


class DegreeMismatch(LatLabError):
    pass


class NotASublattice(LatLabError):
    pass
