"""Domain errors raised by the vector subtraction toolkit.

Every error derives from :py:class:`VectorSubtractionError`, so callers
(and the command line) can catch the whole family at once. Errors about
malformed rulesets additionally derive from :py:class:`ValueError`.
"""

from typing import Any


class VectorSubtractionError(Exception):
    """Base class of every domain error."""


class RulesetError(VectorSubtractionError, ValueError):
    """A ruleset text or move list is malformed."""


class ZeroMoveError(RulesetError):
    """The zero vector was given as a move."""


class MixedDimensionError(RulesetError):
    """Moves of different dimensions were mixed in one ruleset."""


class EmptyRulesetError(RulesetError):
    """A ruleset without moves was given."""


class ComponentError(RulesetError):
    """A component is negative, not an integer, or beyond 64 bits."""


class RulesetShapeError(VectorSubtractionError):
    """An operation was called on a ruleset of the wrong size or shape."""


class NegativeResultError(VectorSubtractionError):
    """A translation left the nonnegative quadrant."""


class BudgetExceededError(VectorSubtractionError):
    """A computation would need more memory than the configured budget."""

    def __init__(self, requested: int, allowed: int, what: str) -> None:
        """Initialise the error.

        :param requested: the number of bytes the computation needs.
        :param allowed: the configured budget in bytes.
        :param what: a short description of the computation.
        """
        super().__init__(
            f"{what} needs {requested} bytes, "
            f"which exceeds the memory budget of {allowed} bytes"
        )
        self.requested = requested
        self.allowed = allowed


class UnsupportedRegimeError(VectorSubtractionError):
    """No closed form is known for the given parameters."""


class ColorConflictError(VectorSubtractionError):
    """Two distinct colors were forced on the same cell (strict policy)."""

    def __init__(
        self,
        cell: tuple[int, int],
        existing: str,
        incoming: str,
        existing_derivation: Any,
        incoming_derivation: Any,
    ) -> None:
        """Initialise the error.

        :param cell: the position receiving two colors.
        :param existing: name of the color already on the cell.
        :param incoming: name of the color being applied.
        :param existing_derivation: how the existing color got there.
        :param incoming_derivation: how the new color got there.
        """
        super().__init__(
            f"cell {cell} is colored {existing} ({existing_derivation}) "
            f"but a rule forces {incoming} ({incoming_derivation})"
        )
        self.cell = cell
        self.existing = existing
        self.incoming = incoming
        self.existing_derivation = existing_derivation
        self.incoming_derivation = incoming_derivation


class SchemeFormatError(VectorSubtractionError):
    """A scheme file could not be parsed."""

    def __init__(
        self, message: str, source: str = "<string>", line: int = 0
    ) -> None:
        """Initialise the error.

        :param message: what is wrong.
        :param source: name of the scheme file.
        :param line: 1-based line number, 0 if not line specific.
        """
        location = f"{source}:{line}" if line else source
        super().__init__(f"{location}: {message}")
        self.source = source
        self.detail = message
        self.line = line


class CrossingLinesError(VectorSubtractionError):
    """Two boundary lines cross inside the tested board."""


class GridTooSmallError(VectorSubtractionError):
    """The grid is too small for the requested analysis."""


class DegenerateSegmentError(VectorSubtractionError):
    """A segment has no usable cells on the board."""


class LineError(VectorSubtractionError):
    """A rational line is malformed or has no lattice points on the board."""
