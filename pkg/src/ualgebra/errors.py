"""Exception hierarchy shared by the whole package."""


class UAlgError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(UAlgError):
    """Malformed input text; carries the character position when known."""

    def __init__(self, message: str, pos: int | None = None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class DuplicateSymbolError(UAlgError):
    pass


class UnknownSymbolError(UAlgError):
    pass


class ArityMismatchError(UAlgError):
    def __init__(self, symbol: str, expected: int, found: int):
        self.symbol = symbol
        self.expected = expected
        self.found = found
        super().__init__(f"symbol '{symbol}' expects {expected} argument(s), got {found}")


class UnboundVariableError(UAlgError):
    pass


class SignatureMismatchError(UAlgError):
    pass


class OutOfCarrierError(UAlgError):
    pass


class SizeMismatchError(UAlgError):
    pass


class SizeCapError(UAlgError):
    """An exhaustive routine would exceed its configured cap."""


class PartitionError(UAlgError):
    """Malformed partition: duplicate, missing, or out-of-range elements."""


class NotACongruenceError(UAlgError):
    """Carries the violating (translation, pair) witness."""

    def __init__(self, witness=None):
        self.witness = witness
        super().__init__("partition is not a congruence")


class NotAGroupError(UAlgError):
    pass


class MismatchedBaseError(UAlgError):
    """Two factorizations do not factor the same map."""
