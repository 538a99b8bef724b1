"""Exception hierarchy shared by every symbreak module."""


class SymbreakError(ValueError):
    """Base class for all errors raised by symbreak."""


class IndexOutOfRange(SymbreakError, IndexError):
    pass


class SelfLoop(SymbreakError):
    pass


class BadRole(SymbreakError):
    pass


class LengthMismatch(SymbreakError):
    pass


class NotAutomorphism(SymbreakError):
    pass


class BadParams(SymbreakError):
    pass


class UnknownFamily(SymbreakError):
    pass


class BadContacts(SymbreakError):
    pass


class CappedGroup(SymbreakError):
    """An operation needed the full automorphism group but only a capped prefix was enumerated."""


class NoEdges(SymbreakError):
    pass


class RMaxExceeded(SymbreakError):
    pass


class SearchTimeout(SymbreakError):
    """A labeling search ran past its wall-clock budget."""


class NoSolutionBelowLimit(SymbreakError):
    pass


class OutOfTheoremScope(SymbreakError):
    pass


class ParseError(SymbreakError):
    pass
