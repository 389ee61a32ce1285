"""Exception types shared across the package."""


class KRError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(KRError):
    """Entry grid does not have shape r x (n-r+1)."""


class NegativeEntry(KRError):
    """A grid entry is negative (or not an integer)."""


class PathSumExceeded(KRError):
    """Some monotone staircase sums to more than s.

    Carries a witness: the offending path as a list of (p, q) cells.
    """

    def __init__(self, message, witness=None, total=None):
        super().__init__(message)
        self.witness = witness
        self.total = total


class SizeLimitExceeded(KRError):
    """An enumeration or graph construction passed its cardinality cap."""


class IndexOutOfRange(KRError):
    """Color index outside the range where the requested pivot exists."""


class NotHighestWeight(KRError):
    """Operation requires a classical highest weight element."""


class OracleFailure(KRError):
    """A brute-force oracle found an internal inconsistency.

    Raised when highest-weight matching is not a weight bijection or edge
    propagation conflicts; must not occur on valid crystals.
    """


class InconsistentRecursion(KRError):
    """The energy recursion assigned conflicting values along two paths."""


class LevelMismatch(KRError):
    """Dominant weight level differs from the crystal level s."""
