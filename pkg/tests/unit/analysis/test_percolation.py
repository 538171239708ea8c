"""Test N-percolation inside segments."""

from fractions import Fraction

import numpy as np
import pytest
from assertpy import assert_that

from vector_subtraction.analysis import n_percolates
from vector_subtraction.automaton import SegmentSpec, arith_add, symadd
from vector_subtraction.errors import DegenerateSegmentError
from vector_subtraction.model import parse_ruleset
from vector_subtraction.oracle import OutcomeGrid, compute_grid


@pytest.mark.analysis
class TestPercolation:
    """Spanning N-paths in the middle of a segment."""

    @staticmethod
    @pytest.mark.parametrize("connectivity", [4, 8])
    def test_arithmetic_middle_percolates(connectivity: int) -> None:
        """The five-color middle segment is crossed by N-positions.

        :param connectivity: the neighbourhood.
        """
        builtin = arith_add()
        grid = compute_grid(builtin.ruleset, 400, 400)

        result = n_percolates(grid, builtin.middle, connectivity)

        assert_that(result.percolates).is_true()
        assert_that(result.reached).is_greater_than_or_equal_to(result.high)
        assert_that(sum(result.start)).is_less_than_or_equal_to(result.low)
        assert_that(result.path_length).is_greater_than(1)

    @staticmethod
    @pytest.mark.parametrize("connectivity", [4, 8])
    def test_symmetric_middle_is_blocked(connectivity: int) -> None:
        """Overlapping P-blocks wall off the middle of ``symadd:1,2``.

        :param connectivity: the neighbourhood.
        """
        builtin = symadd(1, 2)
        grid = compute_grid(builtin.ruleset, 400, 400)

        result = n_percolates(grid, builtin.middle, connectivity)

        assert_that(bool(result)).is_false()
        assert_that(result.reached).is_less_than(result.high)

    @staticmethod
    def test_all_n_board() -> None:
        """Without P-positions every segment percolates."""
        grid = OutcomeGrid.from_array(np.zeros((40, 40), dtype=bool))

        result = n_percolates(grid, SegmentSpec())

        assert_that(result.percolates).is_true()
        assert_that(result.end).is_equal_to((39, 39))

    @staticmethod
    def test_all_p_board() -> None:
        """Without N-positions nothing percolates."""
        grid = OutcomeGrid.from_array(np.ones((40, 40), dtype=bool))

        result = n_percolates(grid, SegmentSpec())

        assert_that(result.percolates).is_false()
        assert_that(result.reached).is_equal_to(-1)
        assert_that(result.start).is_none()

    @staticmethod
    @pytest.mark.parametrize("text", ["2,1;1,3", "1,2;2,3;3,1", "1,1"])
    def test_four_implies_eight(text: str) -> None:
        """Diagonal steps only add paths.

        :param text: the ruleset.
        """
        grid = compute_grid(parse_ruleset(text), 120, 120)
        segment = SegmentSpec(upper=(Fraction(3), Fraction(0)))

        if n_percolates(grid, segment, 4):
            assert_that(n_percolates(grid, segment, 8).percolates).is_true()

    @staticmethod
    def test_diagonal_steps_cross_a_checkerboard() -> None:
        """N-cells of a checkerboard touch only at corners."""
        ys, xs = np.mgrid[0:30, 0:30]
        grid = OutcomeGrid.from_array((xs + ys) % 2 == 0)

        assert_that(n_percolates(grid, SegmentSpec(), 4).percolates).is_false()
        assert_that(n_percolates(grid, SegmentSpec(), 8).percolates).is_true()

    @staticmethod
    def test_errors() -> None:
        """Bad connectivities and segments missing the board."""
        grid = OutcomeGrid.from_array(np.zeros((40, 40), dtype=bool))

        with pytest.raises(ValueError):
            n_percolates(grid, SegmentSpec(), 6)
        with pytest.raises(DegenerateSegmentError):
            n_percolates(
                grid, SegmentSpec(lower=(Fraction(1), Fraction(100)))
            )

    @staticmethod
    def test_result_serialises() -> None:
        """Results convert to plain data."""
        grid = OutcomeGrid.from_array(np.zeros((10, 10), dtype=bool))

        data = n_percolates(grid, SegmentSpec(), 8).to_dict()

        assert_that(data).contains_entry(
            {"percolates": True}, {"connectivity": 8}
        )
        assert_that(data["end"]).is_equal_to([9, 9])
