"""A slow dictionary-based outcome computation to check the oracle.

It follows the normal-play recurrence literally, one position at a time,
and shares no code with the package.
"""

import itertools
from typing import Sequence


def reference_p_cells(
    moves: Sequence[tuple[int, int]], width: int, height: int
) -> set[tuple[int, int]]:
    """Compute the P-positions of a planar game by brute force.

    :param moves: the move vectors.
    :param width: the number of columns.
    :param height: the number of rows.

    :return: the P-positions inside the box.
    """
    p_cells: set[tuple[int, int]] = set()
    for y in range(height):
        for x in range(width):
            options = [
                (x - a, y - b) for a, b in moves if a <= x and b <= y
            ]
            if not any(option in p_cells for option in options):
                p_cells.add((x, y))
    return p_cells


def reference_sequence(moves: Sequence[int], length: int) -> list[bool]:
    """Compute a one-dimensional outcome sequence by brute force.

    :param moves: the moves.
    :param length: the number of positions.

    :return: ``True`` for P, position by position.
    """
    values: list[bool] = []
    for x in range(length):
        values.append(not any(m <= x and values[x - m] for m in moves))
    return values


def reference_p_positions(
    moves: Sequence[Sequence[int]], bounds: Sequence[int]
) -> set[tuple[int, ...]]:
    """Compute the P-positions of a game in any dimension by brute force.

    :param moves: the move vectors.
    :param bounds: the side of the box along each axis.

    :return: the P-positions inside the box.
    """
    p_positions: set[tuple[int, ...]] = set()
    for position in itertools.product(*(range(b) for b in bounds)):
        options = [
            tuple(p - m for p, m in zip(position, move))
            for move in moves
            if all(m <= p for p, m in zip(position, move))
        ]
        if not any(option in p_positions for option in options):
            p_positions.add(position)
    return p_positions
