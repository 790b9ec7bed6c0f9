"""Exception hierarchy shared by all modules."""


class TamariError(ValueError):
    """Base class for domain errors raised by :mod:`tamv`."""


class NegativeDistance(TamariError):
    pass


class NotAbove(TamariError):
    """A path that should be weakly above another one is not."""


class NotAboveBase(NotAbove):
    pass


class NotCoprime(TamariError):
    pass


class NotBallot(TamariError):
    pass


class EmptyTree(TamariError):
    pass


class InvalidPivot(TamariError):
    pass


class LengthMismatch(TamariError):
    pass


class MalformedPair(TamariError):
    pass


class NotALattice(TamariError):
    pass


class BoundExceeded(TamariError):
    pass
