"""Exception types shared across the package."""


class SepSysError(Exception):
    """Base class for every error raised by sepsys."""


class BadParams(SepSysError, ValueError):
    pass


class MalformedEdge(SepSysError, ValueError):
    pass


class SelfLoop(MalformedEdge):
    pass


class Disconnected(SepSysError, ValueError):
    pass


class NotATree(SepSysError, ValueError):
    pass


class NotMaximalOuterplanar(SepSysError, ValueError):
    pass


class DualNotAPath(SepSysError, ValueError):
    pass


class Impossible(SepSysError, ValueError):
    """Requested object provably does not exist."""


class ElementNotInGraph(SepSysError, ValueError):
    pass


class InvalidSystem(SepSysError, ValueError):
    pass


class UnknownClass(SepSysError, KeyError):
    pass


class NonConstructiveRow(UnknownClass):
    """Bounds row exists in the literature but has nothing to evaluate."""


class EmptySet(SepSysError, ValueError):
    pass


class IntervalsOverlap(SepSysError, ValueError):
    pass


class WrongOrder(SepSysError, ValueError):
    pass


class TooLarge(SepSysError, ValueError):
    """Instance exceeds a hard size cap."""


class OracleTimeout(SepSysError, RuntimeError):
    pass


class ParseError(SepSysError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SelfCheckFailed(SepSysError, AssertionError):
    """A construction produced a system that does not verify (internal bug)."""


class IncompatibleMethod(SepSysError, ValueError):
    pass
