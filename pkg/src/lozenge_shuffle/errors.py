"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class InexactDivisionError(ArithmeticError):
    """A division expected to be exact left a remainder.

    Formula paths only divide where the quotient is known to be integral,
    so this always signals a bug or an invalid input set.
    """


class RegionError(ValueError):
    """A region descriptor violates one of its validity conditions."""

    def __init__(self, clause: str, message: str):
        super().__init__(f"{clause}: {message}")
        self.clause = clause


class ShuffleError(ValueError):
    """A pair of dent sets is not a shuffling of the source dents."""


class ParseError(ValueError):
    """Input is not a well-formed descriptor (bad JSON, keys or types)."""
