"""Exception hierarchy for partial_hopf.

Verification failures are never raised; they are recorded as report
entries. Everything here signals malformed input or an operation that cannot
be carried out.
"""

from __future__ import annotations


class PartialHopfError(Exception):
    """Base class for every error raised by this package."""


class MissingParameter(PartialHopfError):
    def __init__(self, name: str):
        super().__init__(f"no value assigned to parameter '{name}'")
        self.name = name


class UnknownBasisLabel(PartialHopfError):
    def __init__(self, label: str, algebra: str):
        super().__init__(f"'{label}' is not a basis label of {algebra}")
        self.label = label
        self.algebra = algebra


class AlgebraMismatch(PartialHopfError):
    pass


class NotExactlyDivisible(PartialHopfError):
    pass


class UnknownCatalogId(PartialHopfError):
    def __init__(self, catalog_id: str, known: tuple[str, ...] = ()):
        message = f"unknown catalog id '{catalog_id}'"
        if known:
            message += f" (known: {', '.join(known)})"
        super().__init__(message)
        self.catalog_id = catalog_id


class ExpressionError(PartialHopfError):
    """An expression cannot be parsed or evaluated.

    ``position`` is the 0-based offset into the expression text, when known.
    """

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.message = message
        self.position = position


class ExpressionSyntaxError(ExpressionError):
    pass


class DefinitionError(PartialHopfError):
    """Malformed definition input, located by source, line and column."""

    def __init__(
        self,
        message: str,
        *,
        source: str = "<string>",
        line: int = 0,
        column: int = 0,
    ):
        super().__init__(message)
        self.message = message
        self.source = source
        self.line = line
        self.column = column

    def __str__(self) -> str:
        return f"{self.source}:{self.line}:{self.column}: {self.message}"


class DefinitionSyntaxError(DefinitionError):
    pass


class UndeclaredLabel(DefinitionError):
    pass


class UndeclaredParameter(DefinitionError):
    pass


class DuplicateBlock(DefinitionError):
    pass


class UnknownBlock(DefinitionError):
    pass


class SpanError(PartialHopfError):
    """A smash element could not be written in the extracted basis."""


class NotInSpan(SpanError):
    pass


class InexactCoordinate(SpanError):
    pass
