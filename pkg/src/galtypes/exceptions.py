"""Exception hierarchy shared by every module of the package."""


class GaltypesError(Exception):
    """Base class for all package errors."""


class PolyParseError(GaltypesError, ValueError):
    """Malformed polynomial text.

    ``position`` is the 0-based character offset of the offending token.
    """

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class NotPrimeError(GaltypesError, ValueError):
    pass


class ModulusMismatchError(GaltypesError, ValueError):
    pass


class NotSquarefreeError(GaltypesError, ValueError):
    pass


class UnsupportedDegreeError(GaltypesError, ValueError):
    pass


class ReducibleError(GaltypesError, ValueError):
    """The polynomial has a nontrivial factor; ``witness`` holds it."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class GroupError(GaltypesError, ValueError):
    """Invalid permutation-group input (bad permutation, non-subgroup, ...)."""
