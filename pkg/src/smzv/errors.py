"""Exception hierarchy shared by all modules."""


class SmzvError(Exception):
    pass


class NotInH1(SmzvError, ValueError):
    """A word that should start with ``y`` (or be empty) starts with ``x``."""


class InvalidWord(SmzvError, ValueError):
    pass


class InvalidIndex(SmzvError, ValueError):
    pass


class EmptyIndex(SmzvError, ValueError):
    pass


class NotAdmissible(SmzvError, ValueError):
    """An MZV symbol was requested for an index whose last part is 1."""


class TruncationMismatch(SmzvError, ValueError):
    pass


class TruncationExceeded(SmzvError, IndexError):
    pass


class PrecisionUnreachable(SmzvError, ArithmeticError):
    pass


class UnknownId(SmzvError, KeyError):
    pass


class UnknownLemma(UnknownId):
    pass
