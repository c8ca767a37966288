"""Exception hierarchy shared by every module of the package."""


class TangleKitError(ValueError):
    """Base class for all errors raised by tanglekit."""


# tangle construction and composition
class NotAMatching(TangleKitError):
    pass


class Crossing(TangleKitError):
    pass


class DecorationNotExposed(TangleKitError):
    pass


class OddNodeTotal(TangleKitError):
    pass


class IndexOutOfRange(TangleKitError):
    pass


class UnknownArc(TangleKitError):
    pass


class FaceMismatch(TangleKitError):
    pass


class NotBlobLike(TangleKitError):
    pass


# algebra engines and elements
class DecoratedInputForTL(TangleKitError):
    pass


class NotInBasis(TangleKitError):
    pass


class KindMismatch(TangleKitError):
    pass


class IllegalLetter(TangleKitError):
    pass


# word combinatorics
class ConditionFailed(TangleKitError):
    pass


class NotReduced(TangleKitError):
    pass


class NotPlainTL(TangleKitError):
    pass


# correspondences
class NotBlobDiagram(TangleKitError):
    pass


class NotSymmetric(TangleKitError):
    pass


# persistence
class CorruptTable(TangleKitError):
    pass
