"""N-percolation within a segment, tested on a finite board.

A segment percolates when a connected path of N-positions inside it
runs from the cells nearest the origin to the far end. On a board the
far end is cut off, so the path must span the central part of the
segment: from ``x + y <= t_low`` to ``x + y >= t_high``, with the two
levels leaving a margin of ``(1 - span) / 2`` of the diagonal range at
each end.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Any

import numpy as np

from ..automaton.scheme import Point, SegmentSpec
from ..config import DEFAULT_CONFIG, SolverConfig
from ..errors import DegenerateSegmentError
from ..oracle.grid import OutcomeGrid

logger = logging.getLogger("vector_subtraction.analysis")

_STEPS = {
    4: ((1, 0), (-1, 0), (0, 1), (0, -1)),
    8: tuple(
        (dx, dy)
        for dx in (-1, 0, 1)
        for dy in (-1, 0, 1)
        if dx or dy
    ),
}


@dataclass(frozen=True)
class PercolationResult:
    """The verdict of a percolation test and its witness path.

    :param percolates: whether an N-path spans the segment.
    :param connectivity: 4 or 8.
    :param low: the diagonal level the path must start below.
    :param high: the diagonal level the path must reach.
    :param reached: the largest diagonal level reached.
    :param start: the first cell of the witness path, if any.
    :param end: the last cell of the witness path, if any.
    :param path_length: the number of cells on the witness path.
    """

    percolates: bool
    connectivity: int
    low: float
    high: float
    reached: int
    start: Point | None = None
    end: Point | None = None
    path_length: int = 0

    def __bool__(self) -> bool:
        return self.percolates

    def to_dict(self) -> dict[str, Any]:
        """Convert to plain data for JSON output.

        :return: the result as a dictionary.
        """
        return {
            "percolates": self.percolates,
            "connectivity": self.connectivity,
            "low": self.low,
            "high": self.high,
            "reached": self.reached,
            "start": None if self.start is None else list(self.start),
            "end": None if self.end is None else list(self.end),
            "path_length": self.path_length,
        }


def n_percolates(
    grid: OutcomeGrid,
    segment: SegmentSpec,
    connectivity: int = 4,
    *,
    config: SolverConfig = DEFAULT_CONFIG,
) -> PercolationResult:
    """Search for a spanning path of N-positions inside a segment.

    :param grid: the grid.
    :param segment: the segment.
    :param connectivity: 4 for edge neighbours, 8 to add diagonals.
    :param config: the spanned fraction of the diagonal range.

    :return: the verdict; when it percolates the witness path runs from
        ``start`` to ``end``.

    :raises ValueError: if the connectivity is neither 4 nor 8.
    :raises DegenerateSegmentError: if the segment meets the board in
        too few diagonals.
    """
    if connectivity not in _STEPS:
        raise ValueError(f"connectivity must be 4 or 8, got {connectivity}")
    inside = segment.mask(grid.width, grid.height)
    if not np.any(inside):
        raise DegenerateSegmentError(
            f"the segment {segment} misses the "
            f"{grid.width}x{grid.height} board"
        )
    ys, xs = np.nonzero(inside)
    diagonals = xs + ys
    first, last = int(diagonals.min()), int(diagonals.max())
    if last == first:
        raise DegenerateSegmentError(
            f"the segment {segment} meets the board in one diagonal"
        )
    margin = (1 - config.percolation_span) / 2
    low = first + margin * (last - first)
    high = first + (1 - margin) * (last - first)

    open_cells = inside & ~grid.to_array()
    parent: dict[Point, Point | None] = {}
    queue: deque[Point] = deque()
    for y, x in np.argwhere(open_cells):
        if x + y <= low:
            cell = (int(x), int(y))
            parent[cell] = None
            queue.append(cell)

    farthest: Point | None = None
    while queue:
        cell = queue.popleft()
        if farthest is None or sum(cell) > sum(farthest):
            farthest = cell
        x, y = cell
        for dx, dy in _STEPS[connectivity]:
            u, v = x + dx, y + dy
            if (
                0 <= u < grid.width
                and 0 <= v < grid.height
                and open_cells[v, u]
                and (u, v) not in parent
            ):
                parent[(u, v)] = cell
                queue.append((u, v))

    if farthest is None:
        logger.debug("No N-cell below level %.1f in %s", low, segment)
        return PercolationResult(False, connectivity, low, high, -1)
    path = [farthest]
    while (previous := parent[path[-1]]) is not None:
        path.append(previous)
    reached = sum(farthest)
    result = PercolationResult(
        reached >= high,
        connectivity,
        low,
        high,
        reached,
        path[-1],
        farthest,
        len(path),
    )
    logger.debug(
        "Percolation (%d-connected) reached level %d of %.1f",
        connectivity,
        reached,
        high,
    )
    return result
