"""Exception hierarchy for latcuts."""


class LatticeCutsError(Exception):
    """Base class for every error raised by this package."""


class DuplicateElement(LatticeCutsError):
    pass


class UnknownElement(LatticeCutsError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class CyclicCovers(LatticeCutsError):
    pass


class NotALattice(LatticeCutsError):
    """Raised with the pair of elements that lacks a meet or a join."""

    def __init__(self, witness, reason="no greatest lower bound"):
        self.witness = witness
        self.reason = reason
        super().__init__(f"{witness[0]!r} and {witness[1]!r} have {reason}")


class SizeOutOfRange(LatticeCutsError, ValueError):
    pass


class InternalInvariantViolation(LatticeCutsError, AssertionError):
    """A property that the theory guarantees did not hold; this is a bug."""


class FamilyNotClosed(LatticeCutsError):
    pass


class NotInS(LatticeCutsError):
    pass


class WitnessVerificationFailed(LatticeCutsError):
    pass


class CapExceeded(LatticeCutsError):
    pass


class SearchSpaceTooLarge(CapExceeded):
    pass


class ParseError(LatticeCutsError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownMember(ParseError):
    pass


class DuplicateSet(ParseError):
    pass
