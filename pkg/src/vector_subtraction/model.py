"""Rulesets, positions and outcomes of vector subtraction games.

A ruleset is a finite set of nonzero move vectors of one dimension.
Rulesets are immutable and kept in canonical form: duplicates removed,
moves sorted lexicographically. Positions are plain tuples of
nonnegative integers.

.. code-block:: python

    from vector_subtraction.model import classify, parse_ruleset

    ruleset = parse_ruleset("(1,2); (2,1); (3,3)")
    assert str(ruleset) == "1,2;2,1;3,3"
    assert classify(ruleset).additive
"""

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    ComponentError,
    EmptyRulesetError,
    MixedDimensionError,
    NegativeResultError,
    RulesetError,
    RulesetShapeError,
    ZeroMoveError,
)

U64_MAX = 2**64 - 1

Move = tuple[int, ...]
Position = tuple[int, ...]


class Outcome(enum.Enum):
    """Outcome class of a position under normal play."""

    P = "P"
    """The previous player wins; every terminal position is P."""

    N = "N"
    """The next player (the one to move) wins."""

    @classmethod
    def from_bit(cls, is_p: bool) -> "Outcome":
        """Convert a grid bit (1 for P) to an outcome.

        :param is_p: whether the bit is set.

        :return: the outcome.
        """
        return cls.P if is_p else cls.N

    def __str__(self) -> str:
        return self.value


def _check_component(value: object, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ComponentError(f"{what} component {value!r} is not an integer")
    if value < 0:
        raise ComponentError(f"{what} component {value} is negative")
    if value > U64_MAX:
        raise ComponentError(
            f"{what} component {value} does not fit in 64 bits"
        )
    return value


class Ruleset:
    """A finite set of move vectors sharing one dimension.

    Moves are deduplicated and sorted lexicographically on construction;
    the resulting object is immutable and hashable.
    """

    __slots__ = ("_moves",)

    _moves: tuple[Move, ...]

    def __init__(self, moves: Iterable[Sequence[int]]) -> None:
        """Validate and canonicalise a collection of moves.

        :param moves: the move vectors.

        :raises EmptyRulesetError: if no move is given.
        :raises MixedDimensionError: if moves differ in dimension.
        :raises ZeroMoveError: if a move is the zero vector.
        :raises ComponentError: if a component is not a 64-bit
            nonnegative integer.
        """
        checked: set[Move] = set()
        dimension: int | None = None
        for raw in moves:
            move = tuple(_check_component(c, "move") for c in raw)
            if not move:
                raise MixedDimensionError("a move must have a component")
            if dimension is None:
                dimension = len(move)
            elif len(move) != dimension:
                raise MixedDimensionError(
                    f"move {move} has dimension {len(move)}, "
                    f"expected {dimension}"
                )
            if not any(move):
                raise ZeroMoveError("the zero vector is not a move")
            checked.add(move)
        if not checked:
            raise EmptyRulesetError("a ruleset needs at least one move")
        object.__setattr__(self, "_moves", tuple(sorted(checked)))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Ruleset is immutable")

    @property
    def moves(self) -> tuple[Move, ...]:
        """The canonical, sorted moves.

        :return: the moves.
        """
        return self._moves

    @property
    def dimension(self) -> int:
        """The dimension shared by all moves.

        :return: the dimension.
        """
        return len(self.moves[0])

    @property
    def max_component(self) -> int:
        """The largest component over all moves.

        :return: the largest component.
        """
        return max(max(move) for move in self.moves)

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self) -> Iterator[Move]:
        return iter(self.moves)

    def __contains__(self, move: object) -> bool:
        return move in self.moves

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ruleset):
            return NotImplemented
        return self.moves == other.moves

    def __hash__(self) -> int:
        return hash(self.moves)

    def __repr__(self) -> str:
        return f"Ruleset({list(self.moves)!r})"

    def __str__(self) -> str:
        return render_ruleset(self)


_STRIP = re.compile(r"[\s(){}\[\]]")


def parse_ruleset(text: str) -> Ruleset:
    """Parse a ruleset from its text form.

    Moves are separated by ``;`` and components by ``,``; whitespace and
    brackets are ignored, so ``"2,1;1,3"`` and ``"(2, 1); (1, 3)"`` are
    the same ruleset.

    :param text: the ruleset text.

    :return: the canonical ruleset.

    :raises RulesetError: if the text is malformed (see
        :py:class:`Ruleset` for the specific subclasses).
    """
    moves = []
    for piece in _STRIP.sub("", text).split(";"):
        if not piece:
            continue
        components = []
        for token in piece.split(","):
            try:
                value = int(token)
            except ValueError as error:
                raise ComponentError(
                    f"component {token!r} of move {piece!r} "
                    "is not an integer"
                ) from error
            components.append(value)
        moves.append(components)
    return Ruleset(moves)


def render_ruleset(ruleset: Ruleset) -> str:
    """Render a ruleset canonically, e.g. ``"1,3;2,1"``.

    :param ruleset: the ruleset.

    :return: the canonical text.
    """
    return ";".join(",".join(str(c) for c in move) for move in ruleset)


# names of rulesets worth exploring; "-s @name" on the command line
_KNOWN = {
    "crow-squirrel": "2,1;1,3",
    "diluted-boxes": "13,1;2,16",
    "asym-additive": "1,2;2,3;3,1",
    "sym-additive": "1,2;2,1;3,3",
    "arith-additive": "1,2;3,4;4,6",
    "sym-4seg": "2,6;6,2;3,3",
    "asym-4seg": "2,6;3,3;6,1",
    "max-sym": "1,7;7,1;10,10",
    "4seg-a": "1,7;8,1;14,14",
    "4seg-b": "1,7;2,10;6,1",
    "5seg": "2,6;3,3;6,1;19,6",
    "6seg": "2,6;4,11;6,1;6,3;19,5",
    "chaos": "0,1;1,0;1,1;1,2;2,2;2,51;4,3;4,4;13,1",
}


def known_rulesets() -> dict[str, Ruleset]:
    """Return the catalogue of named rulesets.

    :return: a mapping from name to ruleset.
    """
    return {name: parse_ruleset(text) for name, text in _KNOWN.items()}


def resolve_ruleset(text: str) -> Ruleset:
    """Parse a ruleset, accepting ``@name`` for catalogue entries.

    :param text: the ruleset text or ``@`` followed by a catalogue name.

    :return: the ruleset.

    :raises RulesetError: if the name is unknown or the text malformed.
    """
    if text.startswith("@"):
        try:
            return parse_ruleset(_KNOWN[text[1:]])
        except KeyError as error:
            raise RulesetError(
                f"unknown ruleset {text!r}; known: {', '.join(_KNOWN)}"
            ) from error
    return parse_ruleset(text)


@dataclass(frozen=True)
class RulesetClass:  # pylint: disable=too-many-instance-attributes
    """Structural flags of a ruleset.

    The witnesses name the moves that make a flag hold: ``sum_move`` is
    the move equal to the sum of the other two in an additive ruleset;
    ``asymmetric_witness`` is ``(u, v, w)`` with ``w.x = u.x + v.x`` and
    ``v.y = u.y + w.y``; ``progression_step`` is ``c`` for rulesets
    ``{(a,b), (a+c,b+c), (a+2c,b+2c)}``.
    """

    symmetric: bool = False
    twin: bool = False
    additive: bool = False
    asymmetric_additive: bool = False
    arithmetic_additive: bool = False
    max_symmetric: bool = False
    twin_progression: bool = False
    sum_move: Move | None = None
    asymmetric_witness: tuple[Move, Move, Move] | None = None
    progression_step: int | None = None


def _sum_move(moves: tuple[Move, ...]) -> Move | None:
    if len(moves) != 3:
        return None
    for index, candidate in enumerate(moves):
        first, second = (m for i, m in enumerate(moves) if i != index)
        if candidate == tuple(a + b for a, b in zip(first, second)):
            return candidate
    return None


def _asymmetric_witness(
    moves: tuple[Move, ...]
) -> tuple[Move, Move, Move] | None:
    if len(moves) != 3 or len(moves[0]) != 2:
        return None
    for u in moves:
        for v in moves:
            for w in moves:
                if len({u, v, w}) < 3:
                    continue
                if w[0] == u[0] + v[0] and v[1] == u[1] + w[1]:
                    return (u, v, w)
    return None


def _progression_step(moves: tuple[Move, ...]) -> int | None:
    if len(moves) != 3 or len(moves[0]) != 2:
        return None
    first, middle, last = moves
    step = middle[0] - first[0]
    if step <= 0 or middle[1] - first[1] != step:
        return None
    if last != (first[0] + 2 * step, first[1] + 2 * step):
        return None
    return step


def _max_symmetric(moves: tuple[Move, ...]) -> bool:
    top = tuple(max(column) for column in zip(*moves))
    if top not in moves:
        return False
    return all(
        tuple(t - c for t, c in zip(top, move)) in moves
        for move in moves
        if move != top
    )


def classify(ruleset: Ruleset) -> RulesetClass:
    """Compute the structural flags of a ruleset.

    Symmetry, twins, the asymmetric additive shape, the arithmetic
    additive family and twin progressions are planar notions and stay
    false for other dimensions. Additivity and max-symmetry are checked
    in any dimension.

    :param ruleset: the ruleset.

    :return: the flags and their witnesses.
    """
    moves = ruleset.moves
    planar = ruleset.dimension == 2
    symmetric = planar and all((b, a) in moves for a, b in moves)
    twin = planar and all(a == b for a, b in moves)
    sum_move = _sum_move(moves)
    witness = _asymmetric_witness(moves)
    step = _progression_step(moves)
    arithmetic = False
    if planar and len(moves) == 3:
        unit = moves[0][0]
        arithmetic = unit > 0 and moves == (
            (unit, 2 * unit),
            (3 * unit, 4 * unit),
            (4 * unit, 6 * unit),
        )
    return RulesetClass(
        symmetric=symmetric,
        twin=twin,
        additive=sum_move is not None,
        asymmetric_additive=witness is not None,
        arithmetic_additive=arithmetic,
        max_symmetric=_max_symmetric(moves),
        twin_progression=step is not None,
        sum_move=sum_move,
        asymmetric_witness=witness,
        progression_step=step,
    )


def mirror(ruleset: Ruleset) -> Ruleset:
    """Swap the two coordinates of every move.

    The outcome grid of the mirror ruleset is the transposed grid.

    :param ruleset: a planar ruleset.

    :return: the mirror ruleset.

    :raises RulesetShapeError: if the ruleset is not planar.
    """
    if ruleset.dimension != 2:
        raise RulesetShapeError(
            f"mirror needs a planar ruleset, got dimension "
            f"{ruleset.dimension}"
        )
    return Ruleset((b, a) for a, b in ruleset)


def as_position(components: Iterable[int], dimension: int) -> Position:
    """Validate a position for a ruleset of the given dimension.

    :param components: the coordinates.
    :param dimension: the expected dimension.

    :return: the position as a tuple.

    :raises RulesetShapeError: if the dimension does not match.
    :raises ComponentError: if a coordinate is not a 64-bit
        nonnegative integer.
    """
    position = tuple(_check_component(c, "position") for c in components)
    if len(position) != dimension:
        raise RulesetShapeError(
            f"position {position} has dimension {len(position)}, "
            f"expected {dimension}"
        )
    return position


def translate(position: Sequence[int], ruleset: Ruleset, k: int) -> Position:
    """Translate a position by ``k`` times the sum of the two moves.

    :param position: the position.
    :param ruleset: a two-move ruleset.
    :param k: the number of translations; negative values translate
        backwards.

    :return: the translated position.

    :raises RulesetShapeError: if the ruleset does not have two moves.
    :raises NegativeResultError: if the result leaves the quadrant.
    :raises ComponentError: if the result does not fit in 64 bits.
    """
    if len(ruleset) != 2:
        raise RulesetShapeError(
            f"translation needs a two-move ruleset, got {len(ruleset)} moves"
        )
    start = as_position(position, ruleset.dimension)
    first, second = ruleset.moves
    result = tuple(
        p + k * (a + b) for p, a, b in zip(start, first, second)
    )
    if any(c < 0 for c in result):
        raise NegativeResultError(
            f"translating {start} by {k} steps gives {result}"
        )
    return as_position(result, ruleset.dimension)


def options(ruleset: Ruleset, position: Sequence[int]) -> list[Position]:
    """List the positions reachable in one move.

    :param ruleset: the ruleset.
    :param position: the position.

    :return: the options, in move order.
    """
    start = as_position(position, ruleset.dimension)
    reachable = []
    for move in ruleset:
        target = tuple(p - m for p, m in zip(start, move))
        if min(target) >= 0:
            reachable.append(target)
    return reachable
