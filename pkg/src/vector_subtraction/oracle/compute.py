"""Dynamic-programming outcome computation.

Every option of a position is componentwise smaller, so positions can
be resolved in any monotone order. Planar grids are built row by row:
moves that change ``y`` are applied to a whole row at once by shifting
earlier rows, then moves along the row are resolved left to right.
"""

import logging
import math
from typing import Sequence

import numpy as np

from ..closed_form import solve
from ..config import DEFAULT_CONFIG, SolverConfig
from ..errors import (
    BudgetExceededError,
    GridTooSmallError,
    RulesetShapeError,
    UnsupportedRegimeError,
)
from ..model import Move, Outcome, Ruleset, as_position
from .grid import OutcomeGrid, OutcomeSequence, _row_bytes

logger = logging.getLogger("vector_subtraction.oracle")

MAX_BOX_DIMENSION = 6


def _check_budget(requested: int, config: SolverConfig, what: str) -> None:
    if requested > config.memory_budget_bytes:
        raise BudgetExceededError(requested, config.memory_budget_bytes, what)


def grid_bytes(ruleset: Ruleset, width: int, height: int) -> int:
    """Estimate the memory :py:func:`compute_grid` needs.

    :param ruleset: a planar ruleset.
    :param width: the number of columns.
    :param height: the number of rows.

    :return: the packed storage plus the unpacked row window, in bytes.
    """
    window = max(move[1] for move in ruleset) + 1
    return height * _row_bytes(width) + window * width


def _resolve_along(cells: np.ndarray, steps: Sequence[int]) -> None:
    """Resolve moves along a line in place, left to right.

    ``cells`` holds the candidates still P after the other moves; a
    candidate becomes N when a step reaches a P-cell to its left.
    """
    if not steps:
        return
    values = cells.tolist()
    for x in np.flatnonzero(cells).tolist():
        for step in steps:
            if step <= x and values[x - step]:
                values[x] = False
                break
    cells[:] = values


def compute_grid(
    ruleset: Ruleset,
    width: int,
    height: int,
    *,
    config: SolverConfig = DEFAULT_CONFIG,
) -> OutcomeGrid:
    """Compute the outcomes of a planar ruleset over ``[0,W) x [0,H)``.

    :param ruleset: a planar ruleset.
    :param width: the number of columns.
    :param height: the number of rows.
    :param config: limits, notably the memory budget.

    :return: the grid.

    :raises RulesetShapeError: if the ruleset is not planar.
    :raises GridTooSmallError: if a side is not positive.
    :raises BudgetExceededError: if the grid does not fit the budget.
    """
    if ruleset.dimension != 2:
        raise RulesetShapeError(
            f"compute_grid needs a planar ruleset, got dimension "
            f"{ruleset.dimension}"
        )
    if width < 1 or height < 1:
        raise GridTooSmallError(
            f"a grid needs positive sides, got {width}x{height}"
        )
    needed = grid_bytes(ruleset, width, height)
    _check_budget(needed, config, f"a {width}x{height} grid")
    logger.debug(
        "Computing %dx%d grid for %s (%d bytes)",
        width,
        height,
        ruleset,
        needed,
    )

    vertical = [m for m in ruleset if m[1] >= 1 and m[0] < width]
    along = sorted(m[0] for m in ruleset if m[1] == 0)
    window_size = max(m[1] for m in ruleset) + 1
    window = np.zeros((window_size, width), dtype=bool)
    packed = np.zeros((height, _row_bytes(width)), dtype=np.uint8)
    used = (width + 7) // 8

    for y in range(height):
        row = np.ones(width, dtype=bool)
        for sx, sy in vertical:
            if sy > y:
                continue
            earlier = window[(y - sy) % window_size]
            row[sx:] &= ~earlier[: width - sx]
        _resolve_along(row, along)
        window[y % window_size] = row
        packed[y, :used] = np.packbits(row, bitorder="little")

    return OutcomeGrid(width, height, packed, ruleset)


def compute_sequence(ruleset: Ruleset, length: int) -> OutcomeSequence:
    """Compute the outcomes of a one-dimensional ruleset over ``0..n-1``.

    :param ruleset: a one-dimensional ruleset.
    :param length: the number of positions.

    :return: the sequence.

    :raises RulesetShapeError: if the ruleset is not one-dimensional.
    :raises GridTooSmallError: if the length is not positive.
    """
    if ruleset.dimension != 1:
        raise RulesetShapeError(
            f"compute_sequence needs a one-dimensional ruleset, got "
            f"dimension {ruleset.dimension}"
        )
    if length < 1:
        raise GridTooSmallError(f"a sequence needs positions, got {length}")
    values = np.ones(length, dtype=bool)
    _resolve_along(values, [m[0] for m in ruleset])
    return OutcomeSequence(values, ruleset)


def _fill_box(cells: np.ndarray, moves: Sequence[Move]) -> None:
    """Resolve a box in place, slicing along the first axis.

    Layer ``i`` is first reduced by moves that step back along the first
    axis, then solved recursively with the moves that keep it fixed.
    """
    if cells.ndim == 1:
        _resolve_along(cells, [m[0] for m in moves])
        return
    across = [m for m in moves if m[0] >= 1]
    within = [m[1:] for m in moves if m[0] == 0]
    for i in range(cells.shape[0]):
        layer = cells[i]
        for move in across:
            if move[0] > i or any(
                s >= n for s, n in zip(move[1:], layer.shape)
            ):
                continue
            target = tuple(slice(s, None) for s in move[1:])
            source = tuple(
                slice(0, n - s) for s, n in zip(move[1:], layer.shape)
            )
            layer[target] &= ~cells[i - move[0]][source]
        _fill_box(layer, within)


def compute_dd(
    ruleset: Ruleset,
    bounds: Sequence[int],
    *,
    config: SolverConfig = DEFAULT_CONFIG,
) -> np.ndarray:
    """Compute outcomes over a box in any dimension up to six.

    :param ruleset: the ruleset.
    :param bounds: the side of the box along each axis.
    :param config: limits, notably the memory budget.

    :return: a boolean array indexed by position, ``True`` for P.

    :raises RulesetShapeError: if the dimensions disagree or exceed six.
    :raises GridTooSmallError: if a side is not positive.
    :raises BudgetExceededError: if the box does not fit the budget.
    """
    shape = tuple(bounds)
    if len(shape) != ruleset.dimension:
        raise RulesetShapeError(
            f"box {shape} does not match dimension {ruleset.dimension}"
        )
    if len(shape) > MAX_BOX_DIMENSION:
        raise RulesetShapeError(
            f"boxes are limited to dimension {MAX_BOX_DIMENSION}"
        )
    if min(shape) < 1:
        raise GridTooSmallError(f"a box needs positive sides, got {shape}")
    _check_budget(math.prod(shape), config, f"a {shape} box")
    cells = np.ones(shape, dtype=bool)
    _fill_box(cells, list(ruleset))
    return cells


def winning_moves(
    ruleset: Ruleset,
    position: Sequence[int],
    grid: OutcomeGrid | None = None,
    *,
    config: SolverConfig = DEFAULT_CONFIG,
) -> list[Move]:
    """List the moves from a position to a P-position.

    Closed forms are used when available; otherwise the given grid, and
    failing that a box computed up to the position.

    :param ruleset: the ruleset.
    :param position: the position.
    :param grid: a grid of this ruleset covering the position, if any.
    :param config: limits for a computed box.

    :return: the winning moves; empty exactly for P-positions.
    """
    start = as_position(position, ruleset.dimension)
    targets = [
        (move, tuple(p - m for p, m in zip(start, move))) for move in ruleset
    ]
    targets = [(move, t) for move, t in targets if min(t) >= 0]
    try:
        return [m for m, t in targets if solve(ruleset, t) is Outcome.P]
    except UnsupportedRegimeError:
        logger.debug("No closed form for %s, using the oracle", ruleset)
    if (
        grid is not None
        and len(start) == 2
        and start[0] < grid.width
        and start[1] < grid.height
    ):
        return [m for m, t in targets if grid.is_p(t[0], t[1])]
    box = compute_dd(ruleset, [p + 1 for p in start], config=config)
    return [m for m, t in targets if box[t]]


def outcome_of(
    ruleset: Ruleset,
    position: Sequence[int],
    *,
    config: SolverConfig = DEFAULT_CONFIG,
) -> Outcome:
    """Decide a position, by closed form when possible.

    :param ruleset: the ruleset.
    :param position: the position.
    :param config: limits for the fallback box.

    :return: the outcome.
    """
    moves = winning_moves(ruleset, position, config=config)
    return Outcome.N if moves else Outcome.P

