"""Exception hierarchy."""


class QHopfError(Exception):
    """Base class for all library errors."""


class ParseError(QHopfError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class BadShape(QHopfError):
    pass


class NotLatinSquare(QHopfError):
    pass


class NoIdentity(QHopfError):
    pass


class NotAssociative(QHopfError):
    pass


class NotIP(QHopfError):
    pass


class SampleRequired(QHopfError):
    pass


class OracleInconsistent(QHopfError):
    pass


class NotFaithful(QHopfError):
    pass


class NotIntegral(QHopfError):
    pass


class NoIntegral(QHopfError):
    pass


class NotDiscreteType(QHopfError):
    pass


class InconsistentTau(QHopfError):
    pass
