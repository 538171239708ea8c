"""Bit-packed outcome grids and sequences.

An :py:class:`OutcomeGrid` stores one bit per position of the box
``[0, W) x [0, H)``, set when the position is a P-position. Rows are
packed little-endian (cell ``x`` is bit ``x % 8`` of byte ``x // 8``)
and padded to whole 64-bit words.
"""

from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from ..errors import GridTooSmallError
from ..model import Outcome, Ruleset, mirror

RAW_MAGIC = b"VSGRID\x00"
RAW_HEADER_SIZE = 16


def _row_bytes(width: int) -> int:
    return 8 * ((width + 63) // 64)


class OutcomeGrid:
    """P/N outcomes of a planar game over a finite box."""

    def __init__(
        self,
        width: int,
        height: int,
        packed: np.ndarray,
        ruleset: Ruleset | None = None,
    ) -> None:
        """Wrap packed rows.

        :param width: the number of columns.
        :param height: the number of rows.
        :param packed: an array of shape ``(height, row_bytes)`` of
            ``uint8`` holding the little-endian packed rows.
        :param ruleset: the ruleset the grid was computed for, if known.

        :raises GridTooSmallError: if the box is empty or the packed
            array has the wrong shape.
        """
        if width < 1 or height < 1:
            raise GridTooSmallError(
                f"a grid needs positive sides, got {width}x{height}"
            )
        expected = (height, _row_bytes(width))
        if packed.shape != expected or packed.dtype != np.uint8:
            raise GridTooSmallError(
                f"packed rows have shape {packed.shape} ({packed.dtype}), "
                f"expected {expected} (uint8)"
            )
        self._width = width
        self._height = height
        self._packed = packed
        self._packed.setflags(write=False)
        self._ruleset = ruleset

    @classmethod
    def from_array(
        cls, cells: np.ndarray, ruleset: Ruleset | None = None
    ) -> "OutcomeGrid":
        """Pack a boolean array indexed ``[y, x]`` (``True`` for P).

        :param cells: the outcomes.
        :param ruleset: the ruleset, if known.

        :return: the grid.
        """
        cells = np.asarray(cells, dtype=bool)
        height, width = cells.shape
        packed = np.zeros((height, _row_bytes(width)), dtype=np.uint8)
        packed[:, : (width + 7) // 8] = np.packbits(
            cells, axis=1, bitorder="little"
        )
        return cls(width, height, packed, ruleset)

    @property
    def width(self) -> int:
        """The number of columns.

        :return: the width.
        """
        return self._width

    @property
    def height(self) -> int:
        """The number of rows.

        :return: the height.
        """
        return self._height

    @property
    def ruleset(self) -> Ruleset | None:
        """The ruleset the grid was computed for, if known.

        :return: the ruleset or ``None``.
        """
        return self._ruleset

    @property
    def packed(self) -> np.ndarray:
        """The read-only packed rows.

        :return: a ``(height, row_bytes)`` array of ``uint8``.
        """
        return self._packed

    @property
    def words(self) -> np.ndarray:
        """The packed rows viewed as little-endian 64-bit words.

        :return: a ``(height, words)`` array of ``uint64``.
        """
        return self._packed.view("<u8")

    def to_array(self) -> np.ndarray:
        """Unpack to a boolean array indexed ``[y, x]``.

        :return: the outcomes, ``True`` for P.
        """
        return np.unpackbits(
            self._packed, axis=1, count=self._width, bitorder="little"
        ).astype(bool)

    def row(self, y: int) -> np.ndarray:
        """Unpack one row.

        :param y: the row index.

        :return: the outcomes of the row, ``True`` for P.
        """
        return np.unpackbits(
            self._packed[y], count=self._width, bitorder="little"
        ).astype(bool)

    def column(self, x: int) -> np.ndarray:
        """Extract one column.

        :param x: the column index.

        :return: the outcomes of the column, ``True`` for P.
        """
        byte, bit = divmod(x, 8)
        return ((self._packed[:, byte] >> bit) & 1).astype(bool)

    def is_p(self, x: int, y: int) -> bool:
        """Tell whether a position is a P-position.

        :param x: the column.
        :param y: the row.

        :return: whether the bit is set.

        :raises IndexError: if the position lies outside the box.
        """
        if not (0 <= x < self._width and 0 <= y < self._height):
            raise IndexError(
                f"({x}, {y}) is outside the {self._width}x{self._height} grid"
            )
        return bool((self._packed[y, x // 8] >> (x % 8)) & 1)

    def outcome(self, x: int, y: int) -> Outcome:
        """Return the outcome of a position.

        :param x: the column.
        :param y: the row.

        :return: the outcome.
        """
        return Outcome.from_bit(self.is_p(x, y))

    def p_cells(self) -> set[tuple[int, int]]:
        """Collect the P-positions.

        :return: the set of ``(x, y)`` P-positions.
        """
        ys, xs = np.nonzero(self.to_array())
        return set(zip(xs.tolist(), ys.tolist()))

    def count_p(self) -> int:
        """Count the P-positions.

        :return: the number of set bits.
        """
        return int(np.unpackbits(self._packed).sum())

    def transpose(self) -> "OutcomeGrid":
        """Swap the axes; this is the grid of the mirror ruleset.

        :return: the transposed grid.
        """
        ruleset = None
        if self._ruleset is not None and self._ruleset.dimension == 2:
            ruleset = mirror(self._ruleset)
        return OutcomeGrid.from_array(self.to_array().T, ruleset)

    def crop(self, width: int, height: int) -> "OutcomeGrid":
        """Restrict the grid to a smaller box anchored at the origin.

        :param width: the new width.
        :param height: the new height.

        :return: the restricted grid.

        :raises GridTooSmallError: if the box is not inside the grid.
        """
        if not (1 <= width <= self._width and 1 <= height <= self._height):
            raise GridTooSmallError(
                f"cannot crop a {self._width}x{self._height} grid "
                f"to {width}x{height}"
            )
        return OutcomeGrid.from_array(
            self.to_array()[:height, :width], self._ruleset
        )

    def with_flipped(self, x: int, y: int) -> "OutcomeGrid":
        """Return a copy with one outcome inverted.

        :param x: the column.
        :param y: the row.

        :return: the altered grid.
        """
        cells = self.to_array()
        cells[y, x] = not cells[y, x]
        return OutcomeGrid.from_array(cells, self._ruleset)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OutcomeGrid):
            return NotImplemented
        return (
            self._width == other._width
            and self._height == other._height
            and bool(np.array_equal(self._packed, other._packed))
        )

    def __repr__(self) -> str:
        return (
            f"OutcomeGrid({self._width}x{self._height}, "
            f"ruleset={self._ruleset})"
        )


@dataclass(frozen=True, eq=False)
class OutcomeSequence:
    """P/N outcomes of a one-dimensional game over ``0..n-1``."""

    values: np.ndarray = field(repr=False)
    ruleset: Ruleset | None = None

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=bool)
        if values.ndim != 1 or values.size < 1:
            raise GridTooSmallError("a sequence needs at least one position")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return int(self.values.size)

    def __iter__(self) -> Iterator[Outcome]:
        return (Outcome.from_bit(bool(v)) for v in self.values)

    def is_p(self, position: int) -> bool:
        """Tell whether a position is a P-position.

        :param position: the position.

        :return: whether it is P.
        """
        return bool(self.values[position])

    def outcome(self, position: int) -> Outcome:
        """Return the outcome of a position.

        :param position: the position.

        :return: the outcome.
        """
        return Outcome.from_bit(self.is_p(position))

    def p_positions(self) -> list[int]:
        """List the P-positions in increasing order.

        :return: the P-positions.
        """
        return np.flatnonzero(self.values).tolist()

    def __str__(self) -> str:
        return "".join("P" if v else "N" for v in self.values)


def write_raw(grid: OutcomeGrid) -> bytes:
    """Serialise a grid to the raw dump format.

    The dump starts with a 16-byte header (the magic ``VSGRID\\0``, one
    pad byte, then width and height as little-endian u32) followed by the
    outcomes packed little-endian, row after row, without row padding.

    :param grid: the grid.

    :return: the dump.
    """
    header = RAW_MAGIC + b"\x00"
    header += np.array([grid.width, grid.height], dtype="<u4").tobytes()
    body = np.packbits(grid.to_array().ravel(), bitorder="little")
    return header + body.tobytes()


def read_raw(data: bytes, ruleset: Ruleset | None = None) -> OutcomeGrid:
    """Parse the raw dump format written by :py:func:`write_raw`.

    :param data: the dump.
    :param ruleset: the ruleset to attach to the grid, if known.

    :return: the grid.

    :raises ValueError: if the header or the length is wrong.
    """
    if len(data) < RAW_HEADER_SIZE or not data.startswith(RAW_MAGIC):
        raise ValueError("not a raw outcome grid dump")
    width, height = np.frombuffer(data[8:16], dtype="<u4").tolist()
    cells = width * height
    body = np.frombuffer(data[RAW_HEADER_SIZE:], dtype=np.uint8)
    if body.size != (cells + 7) // 8:
        raise ValueError(
            f"dump body holds {body.size} bytes, "
            f"expected {(cells + 7) // 8} for {width}x{height}"
        )
    flat = np.unpackbits(body, count=cells, bitorder="little").astype(bool)
    return OutcomeGrid.from_array(flat.reshape(height, width), ruleset)

