"""Constant-memory outcome solvers.

These procedures decide a position without building a grid, in time
linear in the bit length of its coordinates:

* one move in any dimension (the L-shape family);
* two moves in one dimension, and the additive three-move family
  ``{a, b, a+b}`` with ``b <= 2a``;
* two moves in any dimension, by reducing with the translation
  ``s1 + s2`` and reading the parity of the two move chains;
* twin rulesets, by lifting a one-dimensional solver through ``min``.

The two-move procedures also come in vectorised forms that decide a
whole array of positions with numpy.

.. code-block:: python

    from vector_subtraction.closed_form import solve
    from vector_subtraction.model import parse_ruleset

    solve(parse_ruleset("13,1;2,16"), (10**12, 10**12 - 1))

Rulesets outside these families raise
:py:class:`~vector_subtraction.errors.UnsupportedRegimeError`; the
oracle is the fallback.
"""

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import RulesetShapeError, UnsupportedRegimeError, ZeroMoveError
from .model import Move, Outcome, Ruleset, as_position, classify


def _chain(position: Sequence[int], move: Sequence[int]) -> int:
    """Count how many times a move fits into a position."""
    return min(p // m for p, m in zip(position, move) if m > 0)


def _parity(chain: int) -> Outcome:
    return Outcome.P if chain % 2 == 0 else Outcome.N


def solve_one_move_1d(a: int, x: int) -> Outcome:
    """Decide the one-move game ``{a}``.

    :param a: the move.
    :param x: the position.

    :return: P exactly when ``x mod 2a < a``.

    :raises ZeroMoveError: if ``a`` is zero.
    """
    if a < 1:
        raise ZeroMoveError(f"a one-move game needs a >= 1, got {a}")
    return Outcome.from_bit(x % (2 * a) < a)


@dataclass(frozen=True)
class LShapeFamily:
    """The P-positions of the one-move planar game ``{(a, b)}``.

    Level ``n`` holds the positions from which the move fits exactly
    ``2n`` times; level 0 is the terminal set ``{x < a} | {y < b}``.
    When a component is zero the levels collapse to parallel strips.
    """

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 0 or self.b < 0 or self.a + self.b == 0:
            raise ZeroMoveError(
                f"({self.a}, {self.b}) is not a one-move ruleset"
            )

    def level(self, x: int, y: int) -> int | None:
        """Return the index of the L-shape holding a position.

        :param x: the column.
        :param y: the row.

        :return: ``n`` if the position lies in level ``n``, else ``None``.
        """
        chain = _chain((x, y), (self.a, self.b))
        return chain // 2 if chain % 2 == 0 else None

    def contains(self, x: int, y: int) -> bool:
        """Tell whether a position is a P-position.

        :param x: the column.
        :param y: the row.

        :return: whether it lies in some L-shape.
        """
        return self.level(x, y) is not None


def solve_one_move_2d(a: int, b: int, x: int, y: int) -> Outcome:
    """Decide the one-move game ``{(a, b)}``.

    :param a: the move's x-component.
    :param b: the move's y-component.
    :param x: the column.
    :param y: the row.

    :return: the outcome.
    """
    return Outcome.from_bit(LShapeFamily(a, b).contains(x, y))


def solve_two_move_1d(a: int, b: int, x: int) -> Outcome:
    """Decide the two-move game ``{a, b}``, purely periodic with ``a+b``.

    :param a: the smaller move.
    :param b: the larger move.
    :param x: the position.

    :return: the outcome.

    :raises RulesetShapeError: unless ``0 < a < b``.
    """
    if not 0 < a < b:
        raise RulesetShapeError(f"need 0 < a < b, got a={a}, b={b}")
    residue = x % (a + b)
    if residue >= b:
        return Outcome.N
    return solve_one_move_1d(a, residue)


def solve_additive_three_1d(a: int, b: int, x: int) -> Outcome:
    """Decide ``{a, b, a+b}`` when ``b/2 <= a < b``.

    The outcomes are purely periodic with period ``2a + b``.

    :param a: the smaller move.
    :param b: the middle move.
    :param x: the position.

    :return: the outcome.

    :raises UnsupportedRegimeError: unless ``b/2 <= a < b``.
    """
    if not (0 < a < b and b <= 2 * a):
        raise UnsupportedRegimeError(
            f"{{{a}, {b}, {a + b}}} needs b/2 <= a < b"
        )
    return Outcome.from_bit(x % (2 * a + b) < a)


def twin_lift(solve1d: Callable[[int], Outcome], x: int, y: int) -> Outcome:
    """Decide a twin ruleset through its one-dimensional derivation.

    :param solve1d: the solver of the ruleset ``{s : (s, s) in S}``.
    :param x: the column.
    :param y: the row.

    :return: the outcome of ``min(x, y)`` in the one-dimensional game.
    """
    return solve1d(min(x, y))


def symmetric_expansion_holds(a: int, b: int) -> bool:
    """Tell whether a twin pair keeps its P-positions when expanded.

    The expansion adds ``(a, b)`` and then ``(b, a)`` to
    ``{(a, a), (b, b)}``.

    :param a: the smaller diagonal step.
    :param b: the larger diagonal step.

    :return: whether ``b <= 2a``.

    :raises RulesetShapeError: unless ``0 < a < b``.
    """
    if not 0 < a < b:
        raise RulesetShapeError(f"need 0 < a < b, got a={a}, b={b}")
    return b <= 2 * a


def symmetric_expansion_witness(a: int, b: int) -> tuple[int, int] | None:
    """Return a position where the symmetric expansion changes outcome.

    :param a: the smaller diagonal step.
    :param b: the larger diagonal step.

    :return: ``(2a, b)`` when the expansion fails, else ``None``.
    """
    if symmetric_expansion_holds(a, b):
        return None
    return (2 * a, b)


@dataclass(frozen=True)
class TwoMoveGeometry:
    """Regions of a planar two-move ruleset ``{(a,b), (c,d)}``.

    Moves are ordered so that ``a <= c`` (ties broken by ``b <= d``).
    The slope line ``y = delta x`` with ``delta = (b+d)/(a+c)`` splits
    the quadrant; above it the strip ``x < a+c`` is cut into ``A``
    (``x < a``), ``B`` (``a <= x < c``) and ``C`` (``c <= x < c+a``).
    """

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def of(cls, ruleset: Ruleset) -> "TwoMoveGeometry":
        """Build the geometry of a planar two-move ruleset.

        :param ruleset: the ruleset.

        :return: the geometry.

        :raises RulesetShapeError: if the ruleset is not planar with two
            moves.
        """
        _require_two_moves(ruleset, planar=True)
        (a, b), (c, d) = ruleset.moves
        return cls(a, b, c, d)

    @property
    def slope(self) -> Fraction | None:
        """The reduced slope ``(b+d)/(a+c)``, ``None`` when vertical.

        :return: the slope.
        """
        if self.a + self.c == 0:
            return None
        return Fraction(self.b + self.d, self.a + self.c)

    def above_line(self, x: int, y: int) -> bool:
        """Tell whether ``y >= delta x``, exactly.

        :param x: the column.
        :param y: the row.

        :return: whether the position lies on or above the slope line.
        """
        return y * (self.a + self.c) >= x * (self.b + self.d)

    def region_of(self, x: int, y: int) -> str:
        """Label a position with its region.

        :param x: the column.
        :param y: the row.

        :return: ``"A"``, ``"B"`` or ``"C"`` inside the strip above the
            line, ``"mirror"`` strictly below the line and ``"beyond"``
            above the line past the strip.
        """
        if not self.above_line(x, y):
            return "mirror"
        if x < self.a:
            return "A"
        if x < self.c:
            return "B"
        if x < self.c + self.a:
            return "C"
        return "beyond"

    def mirror(self) -> "TwoMoveGeometry":
        """Return the geometry of the mirror ruleset.

        :return: the mirrored geometry.
        """
        first, second = sorted([(self.b, self.a), (self.d, self.c)])
        return TwoMoveGeometry(*first, *second)


def gamma_bullet(geometry: TwoMoveGeometry, x: int, y: int) -> Outcome:
    """Evaluate the vertical-arm rule for positions above the slope line.

    The rule reads: P exactly when ``2na <= x < (2n+1)a`` for some ``n``
    and the position does not dominate ``(c, d)``. It ignores the
    horizontal arms of the L-shapes, so it misjudges low positions such
    as ``(1, 2)`` for ``{(2,1), (1,3)}``; :py:func:`solve_two_move_2d`
    is the complete procedure.

    :param geometry: the geometry.
    :param x: the column.
    :param y: the row.

    :return: the outcome the rule predicts.

    :raises UnsupportedRegimeError: if the position is outside the
        regions ``A``, ``B`` and ``C`` or if ``a`` is zero.
    """
    if geometry.region_of(x, y) not in ("A", "B", "C"):
        raise UnsupportedRegimeError(f"({x}, {y}) is not in the strip")
    if geometry.a == 0:
        raise UnsupportedRegimeError("the rule needs a positive a")
    dominates = x >= geometry.c and y >= geometry.d
    in_arm = x % (2 * geometry.a) < geometry.a
    return Outcome.from_bit(in_arm and not dominates)


def _require_two_moves(ruleset: Ruleset, planar: bool = False) -> None:
    if len(ruleset) != 2:
        raise RulesetShapeError(
            f"expected a two-move ruleset, got {len(ruleset)} moves"
        )
    if planar and ruleset.dimension != 2:
        raise RulesetShapeError(
            f"expected a planar ruleset, got dimension {ruleset.dimension}"
        )


def solve_two_move_2d(ruleset: Ruleset, x: int, y: int) -> Outcome:
    """Decide a planar two-move ruleset.

    Degenerate rulesets whose moves both lie on one axis reduce to the
    one-dimensional game. Otherwise the position is translated back by
    ``k (s1 + s2)`` into the base strip; there it is N when it dominates
    the move with the larger component across the strip, and otherwise
    follows the L-shapes of the other move.

    :param ruleset: a planar two-move ruleset.
    :param x: the column.
    :param y: the row.

    :return: the outcome.
    """
    _require_two_moves(ruleset, planar=True)
    x, y = as_position((x, y), 2)
    geometry = TwoMoveGeometry.of(ruleset)
    a, b, c, d = geometry.a, geometry.b, geometry.c, geometry.d
    if a + c == 0:
        return solve_two_move_1d(min(b, d), max(b, d), y)
    if b + d == 0:
        return solve_two_move_1d(min(a, c), max(a, c), x)
    k = min(x // (a + c), y // (b + d))
    x -= k * (a + c)
    y -= k * (b + d)
    if x >= a + c and b > d:
        a, b, c, d = c, d, a, b
    if x >= c and y >= d:
        return Outcome.N
    return _parity(_chain((x, y), (a, b)))


@dataclass(frozen=True)
class _TwoMovePlan:
    first: Move
    second: Move
    total: Move
    total_array: np.ndarray

    @classmethod
    def of(cls, ruleset: Ruleset) -> "_TwoMovePlan":
        _require_two_moves(ruleset)
        first, second = ruleset.moves
        total = tuple(p + q for p, q in zip(first, second))
        return cls(first, second, total, np.array(total, dtype=np.uint64))


@functools.lru_cache(maxsize=256)
def _plan(ruleset: Ruleset) -> _TwoMovePlan:
    return _TwoMovePlan.of(ruleset)


def solve_two_move_dd(
    ruleset: Ruleset, position: Sequence[int]
) -> Outcome:
    """Decide a two-move ruleset in any dimension.

    The position is reduced by the largest ``k`` with
    ``x - k (s1 + s2) >= 0``; it is P exactly when both moves fit an
    even number of times into the reduced position.

    :param ruleset: a two-move ruleset.
    :param position: the position.

    :return: the outcome.
    """
    plan = _plan(ruleset)
    point = as_position(position, ruleset.dimension)
    k = _chain(point, plan.total)
    reduced = [p - k * t for p, t in zip(point, plan.total)]
    if _chain(reduced, plan.first) % 2 or _chain(reduced, plan.second) % 2:
        return Outcome.N
    return Outcome.P


def _as_points(
    positions: np.ndarray | Sequence[Sequence[int]], dimension: int
) -> np.ndarray:
    points = np.asarray(positions, dtype=np.uint64)
    if points.ndim != 2 or points.shape[1] != dimension:
        raise RulesetShapeError(
            f"expected an array of shape (n, {dimension}), "
            f"got {points.shape}"
        )
    return points


def _fits_many(columns: Iterable[np.ndarray], move: Move) -> np.ndarray:
    return np.minimum.reduce(
        [col // np.uint64(m) for col, m in zip(columns, move) if m > 0]
    )


def solve_two_move_dd_many(
    ruleset: Ruleset, positions: np.ndarray | Sequence[Sequence[int]]
) -> np.ndarray:
    """Decide many positions of a two-move ruleset at once.

    This is :py:func:`solve_two_move_dd` over the rows of an array, on
    unsigned 64-bit coordinates.

    .. code-block:: python

        points = np.array([[5, 6], [3, 5]], dtype=np.uint64)
        solve_two_move_dd_many(parse_ruleset("2,1;1,3"), points)
        # array([False,  True])

    :param ruleset: a two-move ruleset.
    :param positions: an ``(n, d)`` array of positions.

    :return: a boolean array, true at the P-positions.

    :raises RulesetShapeError: if the array does not hold positions of
        the ruleset's dimension.
    """
    plan = _plan(ruleset)
    points = _as_points(positions, ruleset.dimension)
    k = _fits_many(points.T, plan.total)
    reduced = points - k[:, np.newaxis] * plan.total_array
    return (_fits_many(reduced.T, plan.first) % 2 == 0) & (
        _fits_many(reduced.T, plan.second) % 2 == 0
    )


def _two_move_1d_many(small: int, large: int, x: np.ndarray) -> np.ndarray:
    residue = x % np.uint64(small + large)
    return (residue < large) & (residue % np.uint64(2 * small) < small)


def solve_two_move_2d_many(
    ruleset: Ruleset, positions: np.ndarray | Sequence[Sequence[int]]
) -> np.ndarray:
    """Decide many positions of a planar two-move ruleset at once.

    This is :py:func:`solve_two_move_2d` over the rows of an array.

    :param ruleset: a planar two-move ruleset.
    :param positions: an ``(n, 2)`` array of positions.

    :return: a boolean array, true at the P-positions.

    :raises RulesetShapeError: if the array does not hold planar
        positions.
    """
    geometry = TwoMoveGeometry.of(ruleset)
    a, b, c, d = geometry.a, geometry.b, geometry.c, geometry.d
    points = _as_points(positions, 2)
    x, y = points[:, 0], points[:, 1]
    if a + c == 0:
        return _two_move_1d_many(min(b, d), max(b, d), y)
    if b + d == 0:
        return _two_move_1d_many(min(a, c), max(a, c), x)
    k = np.minimum(x // np.uint64(a + c), y // np.uint64(b + d))
    x = x - k * np.uint64(a + c)
    y = y - k * np.uint64(b + d)
    swapped = (x >= a + c) & (b > d)
    dominates = np.where(
        swapped, (x >= a) & (y >= b), (x >= c) & (y >= d)
    )
    chain = np.where(
        swapped, _fits_many((x, y), (c, d)), _fits_many((x, y), (a, b))
    )
    return ~dominates & (chain % 2 == 0)


def solve(ruleset: Ruleset, position: Sequence[int]) -> Outcome:
    """Decide a position with the matching closed form.

    :param ruleset: the ruleset.
    :param position: the position.

    :return: the outcome.

    :raises UnsupportedRegimeError: if no closed form covers the ruleset.
    """
    point = as_position(position, ruleset.dimension)
    moves: tuple[Move, ...] = ruleset.moves
    if len(moves) == 1:
        return _parity(_chain(point, moves[0]))
    if len(moves) == 2:
        if ruleset.dimension == 2:
            return solve_two_move_2d(ruleset, *point)
        return solve_two_move_dd(ruleset, point)
    if ruleset.dimension == 1 and len(moves) == 3:
        flags = classify(ruleset)
        if flags.additive:
            (a,), (b,), _ = moves
            return solve_additive_three_1d(a, b, point[0])
    if ruleset.dimension == 2 and classify(ruleset).twin:
        diagonal = Ruleset((a,) for a, _ in moves)
        return twin_lift(lambda x: solve(diagonal, (x,)), *point)
    raise UnsupportedRegimeError(f"no closed form is known for {ruleset}")
