"""Test the packed grid type and the raw dump format."""

import numpy as np
import pytest
from assertpy import assert_that

from vector_subtraction.errors import GridTooSmallError
from vector_subtraction.model import mirror, parse_ruleset
from vector_subtraction.oracle import (
    OutcomeGrid,
    OutcomeSequence,
    compute_grid,
    read_raw,
    write_raw,
)
from vector_subtraction.oracle.grid import RAW_HEADER_SIZE


@pytest.mark.oracle
class TestOutcomeGrid:
    """Access, packing and transformations of grids."""

    @staticmethod
    def test_rows_are_padded_to_words() -> None:
        """A 70-wide row takes two 64-bit words."""
        grid = OutcomeGrid.from_array(np.ones((3, 70), dtype=bool))

        assert_that(grid.packed.shape).is_equal_to((3, 16))
        assert_that(grid.words.shape).is_equal_to((3, 2))
        assert_that(grid.count_p()).is_equal_to(210)

    @staticmethod
    def test_rows_and_columns(crow_grid: OutcomeGrid) -> None:
        """Rows and columns unpack the same bits as single cells.

        :param crow_grid: a grid of ``{(2,1),(1,3)}``.
        """
        cells = crow_grid.to_array()

        assert_that(crow_grid.row(7).tolist()).is_equal_to(
            cells[7].tolist()
        )
        assert_that(crow_grid.column(13).tolist()).is_equal_to(
            cells[:, 13].tolist()
        )
        assert_that(crow_grid.is_p(13, 7)).is_equal_to(bool(cells[7, 13]))

    @staticmethod
    def test_outside_positions_raise(crow_grid: OutcomeGrid) -> None:
        """Cells beyond the box are not readable.

        :param crow_grid: a grid of ``{(2,1),(1,3)}``.
        """
        with pytest.raises(IndexError):
            crow_grid.is_p(50, 0)

    @staticmethod
    def test_transpose_is_the_mirror_grid() -> None:
        """The mirror ruleset's grid is the transposed grid."""
        ruleset = parse_ruleset("1,2;2,3;3,1")
        grid = compute_grid(ruleset, 30, 40)

        transposed = grid.transpose()

        assert_that(transposed).is_equal_to(
            compute_grid(mirror(ruleset), 40, 30)
        )
        assert_that(transposed.ruleset).is_equal_to(mirror(ruleset))

    @staticmethod
    def test_grids_are_read_only(crow_grid: OutcomeGrid) -> None:
        """The packed bits cannot be altered in place.

        :param crow_grid: a grid of ``{(2,1),(1,3)}``.
        """
        with pytest.raises(ValueError):
            crow_grid.packed[0, 0] = 0

    @staticmethod
    def test_flip_copies(crow_grid: OutcomeGrid) -> None:
        """Flipping a cell leaves the original grid intact.

        :param crow_grid: a grid of ``{(2,1),(1,3)}``.
        """
        flipped = crow_grid.with_flipped(3, 5)

        assert_that(flipped.is_p(3, 5)).is_not_equal_to(crow_grid.is_p(3, 5))
        assert_that(flipped).is_not_equal_to(crow_grid)

    @staticmethod
    def test_bad_shapes_are_refused(crow_grid: OutcomeGrid) -> None:
        """Empty boxes, wrong packing and oversized crops are refused.

        :param crow_grid: a grid of ``{(2,1),(1,3)}``.
        """
        with pytest.raises(GridTooSmallError):
            OutcomeGrid(0, 3, np.zeros((3, 8), dtype=np.uint8))
        with pytest.raises(GridTooSmallError):
            OutcomeGrid(9, 3, np.zeros((3, 2), dtype=np.uint8))
        with pytest.raises(GridTooSmallError):
            crow_grid.crop(51, 10)

    @staticmethod
    def test_sequence_needs_a_position() -> None:
        """Sequences are never empty."""
        with pytest.raises(GridTooSmallError):
            OutcomeSequence(np.zeros(0, dtype=bool))


@pytest.mark.oracle
class TestRawDump:
    """The raw dump has a 16-byte header and unpadded packed bits."""

    @staticmethod
    def test_dump_layout() -> None:
        """Header and body of a 3 by 2 grid."""
        cells = np.array([[True, False, True], [False, True, True]])
        data = write_raw(OutcomeGrid.from_array(cells))

        assert_that(data[:8]).is_equal_to(b"VSGRID\x00\x00")
        assert_that(data[8:16]).is_equal_to(
            b"\x03\x00\x00\x00\x02\x00\x00\x00"
        )
        assert_that(data[RAW_HEADER_SIZE:]).is_equal_to(bytes([0b110101]))

    @staticmethod
    def test_dump_reads_back(crow_grid: OutcomeGrid) -> None:
        """Reading a dump restores the grid.

        :param crow_grid: a grid of ``{(2,1),(1,3)}``.
        """
        assert_that(read_raw(write_raw(crow_grid))).is_equal_to(crow_grid)

    @staticmethod
    @pytest.mark.parametrize(
        "data",
        [
            b"",
            b"NOTGRID\x00" + bytes(8),
            b"VSGRID\x00\x00\x03\x00\x00\x00\x02\x00\x00\x00",
        ],
    )
    def test_bad_dumps_are_refused(data: bytes) -> None:
        """Truncated or foreign data is refused.

        :param data: the malformed dump.
        """
        with pytest.raises(ValueError):
            read_raw(data)


@pytest.mark.oracle
class TestAssertions:
    """The custom assertions refuse values of the wrong type."""

    @staticmethod
    def test_wrong_subjects_are_refused() -> None:
        """Each assertion names the type it expects."""
        with pytest.raises(ValueError, match="VerificationReport"):
            assert_that(42).is_verified()
        with pytest.raises(ValueError, match="OutcomeGrid"):
            assert_that("grid").matches_cells([])
        with pytest.raises(ValueError, match="PeriodReport"):
            assert_that([]).has_period(2)

    @staticmethod
    def test_mismatched_cells_are_listed(crow_grid: OutcomeGrid) -> None:
        """A cell mismatch lists both kinds of differences.

        :param crow_grid: a grid of ``{(2,1),(1,3)}``.
        """
        expected = crow_grid.p_cells() - {(0, 0)} | {(5, 6)}

        with pytest.raises(AssertionError, match="2 cells differ"):
            assert_that(crow_grid).matches_cells(expected)
