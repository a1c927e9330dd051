"""Exception hierarchy.

Every error raised by the library derives from :class:`CovroughError`. The CLI
maps :class:`ParseError` to exit status 1 and any other library error to 2.
"""


class CovroughError(Exception):
    """Base class for all library errors."""


class ParseError(CovroughError, ValueError):
    """Malformed input file or argument."""


class EmptyUniverse(CovroughError, ValueError):
    pass


class DuplicateName(CovroughError, ValueError):
    pass


class UnknownLabel(CovroughError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


UnknownElement = UnknownLabel


class EmptySet(CovroughError, ValueError):
    """A covering member is empty."""


class NotACovering(CovroughError, ValueError):
    """The members do not cover the universe."""


class UniverseMismatch(CovroughError, ValueError):
    """Operands live over different universes."""


class IndexOutOfRange(CovroughError, IndexError):
    pass


class CoveringTooLarge(CovroughError, ValueError):
    """Sub-family enumeration would exceed the member cap."""


class OnlyTrivialSubcovering(CovroughError, ValueError):
    """The whole covering is the only sub-family covering the target set."""


class NotAHomomorphism(CovroughError, ValueError):
    pass


class OutOfSupportedRange(CovroughError, ValueError):
    pass


class UniverseTooLargeForEnumeration(CovroughError, ValueError):
    pass


class ScopeTooLarge(CovroughError, ValueError):
    pass


class UnknownLaw(CovroughError, KeyError):
    def __str__(self):
        return Exception.__str__(self)
