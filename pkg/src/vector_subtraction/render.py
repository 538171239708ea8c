"""Images and reports of outcome grids.

Images put the origin at the bottom left, so the first line of a file is
the row ``y = H - 1``. P-positions are black (bit 1 in PBM).

.. code-block:: python

    from vector_subtraction.model import parse_ruleset
    from vector_subtraction.oracle import compute_grid
    from vector_subtraction.render import render_pbm

    grid = compute_grid(parse_ruleset("2,1;1,3"), 10, 10)
    with open("crow-squirrel.pbm", "wb") as image:
        image.write(render_pbm(grid))
"""

import csv
import io
import json
from typing import Any, Iterable, Protocol, Sequence

import numpy as np

from .automaton.scheme import Coloring
from .model import Ruleset
from .oracle.grid import OutcomeGrid

SCHEMA_VERSION = 1

BLACK = (0, 0, 0)
WHITE = (255, 255, 255)
OVERLAY = (220, 20, 20)

PALETTE = {
    "red": (200, 40, 40),
    "green": (40, 160, 60),
    "blue": (40, 80, 200),
    "gray": (110, 110, 110),
    "silver": (170, 170, 180),
    "orange": (235, 140, 30),
    "yellow": (225, 200, 40),
    "purple": (140, 60, 170),
}
_FALLBACK = ((0, 150, 150), (150, 100, 50), (200, 80, 150), (90, 130, 40))


class _Line(Protocol):  # pylint: disable=too-few-public-methods
    def value(self, x: Any) -> Any:
        """Evaluate the line at ``x``."""


def render_pbm(grid: OutcomeGrid) -> bytes:
    """Write a grid as a plain PBM image.

    :param grid: the grid.

    :return: the image, ``1`` for P.
    """
    cells = grid.to_array()[::-1]
    rows = ["".join("1" if cell else "0" for cell in row) for row in cells]
    header = f"P1\n{grid.width} {grid.height}\n"
    return (header + "".join(row + "\n" for row in rows)).encode("ascii")


def parse_pbm(data: bytes, ruleset: Ruleset | None = None) -> OutcomeGrid:
    """Read a plain PBM image written by :py:func:`render_pbm`.

    Comments and any whitespace between pixels are accepted.

    :param data: the image.
    :param ruleset: the ruleset to attach to the grid.

    :return: the grid.

    :raises ValueError: if the data is not a plain PBM image.
    """
    lines = [
        line.split("#", 1)[0]
        for line in data.decode("ascii").splitlines()
    ]
    tokens = " ".join(lines).split()
    if len(tokens) < 3 or tokens[0] != "P1":
        raise ValueError("not a plain PBM (P1) image")
    width, height = int(tokens[1]), int(tokens[2])
    pixels = "".join(tokens[3:])
    if len(pixels) != width * height or set(pixels) - {"0", "1"}:
        raise ValueError(
            f"expected {width * height} pixels of 0 or 1, got {len(pixels)}"
        )
    cells = np.frombuffer(pixels.encode("ascii"), dtype=np.uint8) == ord("1")
    return OutcomeGrid.from_array(
        cells.reshape(height, width)[::-1], ruleset
    )


def _rgb(name: str, identifier: int) -> tuple[int, int, int]:
    return PALETTE.get(name, _FALLBACK[identifier % len(_FALLBACK)])


def render_ppm(
    grid: OutcomeGrid,
    coloring: Coloring | None = None,
    lines: Sequence[_Line] = (),
) -> bytes:
    """Write a grid as a binary PPM image.

    :param grid: the grid; P is black and N white.
    :param coloring: painted cells take their color instead.
    :param lines: boundary lines drawn in red over everything.

    :return: the image.

    :raises ValueError: if the coloring is for another board size.
    """
    image = np.empty((grid.height, grid.width, 3), dtype=np.uint8)
    image[...] = WHITE
    image[grid.to_array()] = BLACK
    if coloring is not None:
        if (coloring.width, coloring.height) != (grid.width, grid.height):
            raise ValueError("the coloring and the grid differ in size")
        for color in coloring.colors:
            image[coloring.identifiers == color.identifier] = _rgb(
                color.name, color.identifier
            )
    for line in lines:
        for x in range(grid.width):
            y = int(np.floor(float(line.value(x))))
            if 0 <= y < grid.height:
                image[y, x] = OVERLAY
    header = f"P6\n{grid.width} {grid.height}\n255\n".encode("ascii")
    return header + image[::-1].tobytes()


def render_csv(grid: OutcomeGrid) -> str:
    """List every cell of a grid as ``x,y,outcome``.

    :param grid: the grid.

    :return: the CSV text, by increasing ``y`` then ``x``.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["x", "y", "outcome"])
    cells = grid.to_array()
    for y in range(grid.height):
        for x in range(grid.width):
            writer.writerow([x, y, "P" if cells[y, x] else "N"])
    return buffer.getvalue()


def render_table_csv(rows: Iterable[dict[str, Any]]) -> str:
    """Write report rows, such as period reports, as CSV.

    :param rows: dictionaries sharing the keys of the first one.

    :return: the CSV text; empty when there are no rows.
    """
    rows = list(rows)
    if not rows:
        return ""
    buffer = io.StringIO()
    writer = csv.DictWriter(
        buffer, fieldnames=list(rows[0]), lineterminator="\n"
    )
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def render_json(kind: str, body: dict[str, Any]) -> str:
    """Wrap a report in the versioned JSON envelope.

    :param kind: what the report is, e.g. ``"periods"``.
    :param body: the report data.

    :return: the JSON text with sorted keys.
    """
    document = {"schema": SCHEMA_VERSION, "kind": kind, **body}
    return json.dumps(document, indent=2, sort_keys=True) + "\n"
