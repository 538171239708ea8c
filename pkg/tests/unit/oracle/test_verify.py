"""Test the grid verifiers of the P-to-P lemmas."""

import pytest
from assertpy import assert_that

from vector_subtraction.config import SolverConfig
from vector_subtraction.errors import RulesetShapeError
from vector_subtraction.model import Ruleset, parse_ruleset
from vector_subtraction.oracle import (
    OutcomeGrid,
    VerificationReport,
    compute_grid,
    verify_additive_converse,
    verify_exchange,
    verify_ptop,
    verify_three_move_lemmas,
)


@pytest.mark.oracle
class TestPToP:
    """Two-move grids are invariant under the sum of the moves."""

    @staticmethod
    @pytest.mark.parametrize("text", ["2,1;1,3", "13,1;2,16", "0,2;5,0"])
    def test_two_move_grids_pass(text: str) -> None:
        """Translation by ``s1 + s2`` preserves every outcome.

        :param text: the ruleset.
        """
        grid = compute_grid(parse_ruleset(text), 100, 100)

        assert_that(verify_ptop(grid)).is_verified()

    @staticmethod
    def test_injected_fault_is_located(crow_grid: OutcomeGrid) -> None:
        """Flipping one cell breaks the lemma at both ends of the shift.

        :param crow_grid: a grid of ``{(2,1),(1,3)}``.
        """
        report = verify_ptop(crow_grid.with_flipped(20, 20))

        assert_that(report.passed).is_false()
        assert_that(report).has_counterexample_at(
            (17, 16)
        ).has_counterexample_at((20, 20))
        assert_that(report.total_counterexamples).is_equal_to(2)

    @staticmethod
    def test_failed_report_fails_the_assertion(
        crow_grid: OutcomeGrid,
    ) -> None:
        """``is_verified`` names the failing claim.

        :param crow_grid: a grid of ``{(2,1),(1,3)}``.
        """
        report = verify_ptop(crow_grid.with_flipped(20, 20))

        with pytest.raises(AssertionError, match="p-to-p"):
            assert_that(report).is_verified()

    @staticmethod
    def test_three_moves_are_refused() -> None:
        """The two-move lemma needs two moves."""
        grid = compute_grid(parse_ruleset("1,2;2,3;3,1"), 20, 20)

        with pytest.raises(RulesetShapeError):
            verify_ptop(grid)

    @staticmethod
    def test_counterexamples_are_capped(crow_squirrel: Ruleset) -> None:
        """Reports keep at most the configured number of positions.

        :param crow_squirrel: the ruleset.
        """
        wrong = compute_grid(parse_ruleset("1,1;2,2"), 60, 60)
        config = SolverConfig(max_counterexamples=5)

        report = verify_ptop(wrong, crow_squirrel, config=config)

        assert_that(report.passed).is_false()
        assert_that(report.counterexamples).is_length(5)
        assert_that(report.total_counterexamples).is_greater_than(5)


@pytest.mark.oracle
class TestThreeMoveLemmas:
    """Additive, asymmetric additive and twin progression lemmas."""

    @staticmethod
    @pytest.mark.parametrize(
        ("text", "claims"),
        [
            (
                "1,2;2,1;3,3",
                ["additive-lemma", "additive-i", "additive-iv"],
            ),
            ("1,2;3,4;4,6", ["additive-ii", "additive-iii"]),
            (
                "1,2;2,3;3,1",
                ["asymmetric-i", "asymmetric-ii", "asymmetric-iv"],
            ),
            ("1,1;2,2;3,3", ["twin-progression", "additive-lemma"]),
        ],
    )
    def test_lemmas_hold(text: str, claims: list[str]) -> None:
        """Every applicable item holds on a 100 by 100 grid.

        :param text: the ruleset.
        :param claims: items that must appear in the report.
        """
        grid = compute_grid(parse_ruleset(text), 100, 100)

        report = verify_three_move_lemmas(grid)

        assert_that(report).is_verified()
        assert_that([item.claim for item in report.items]).contains(
            *claims
        )
        for claim in claims:
            assert_that(report.item(claim).cells_checked).is_positive()

    @staticmethod
    def test_other_shapes_are_refused(crow_grid: OutcomeGrid) -> None:
        """Two-move rulesets have none of the three-move shapes.

        :param crow_grid: a grid of ``{(2,1),(1,3)}``.
        """
        with pytest.raises(RulesetShapeError):
            verify_three_move_lemmas(crow_grid)

    @staticmethod
    def test_additive_converse_breaks() -> None:
        """``(0,0)`` is P for ``{(1,1),(2,2),(3,3)}`` but ``(5,5)`` is not."""
        grid = compute_grid(parse_ruleset("1,1;2,2;3,3"), 10, 10)

        report = verify_additive_converse(grid)

        assert_that(report).has_counterexample_at((0, 0))
        assert_that(grid).has_outcome_at((0, 0), "P").has_outcome_at(
            (5, 5), "N"
        )

    @staticmethod
    def test_converse_needs_an_additive_ruleset(
        crow_grid: OutcomeGrid,
    ) -> None:
        """The converse is only defined for additive rulesets.

        :param crow_grid: a grid of ``{(2,1),(1,3)}``.
        """
        with pytest.raises(RulesetShapeError):
            verify_additive_converse(crow_grid)


@pytest.mark.oracle
class TestExchange:
    """The defining recurrence holds on every computed grid."""

    @staticmethod
    @pytest.mark.parametrize(
        "text", ["2,1;1,3", "1,2;2,3;3,1", "0,1;1,0;1,1;1,2;2,2;2,51"]
    )
    def test_computed_grids_pass(text: str) -> None:
        """Computed grids satisfy both halves of the recurrence.

        :param text: the ruleset.
        """
        grid = compute_grid(parse_ruleset(text), 80, 80)

        report = verify_exchange(grid)

        assert_that(report).is_verified()
        assert_that(report.items).is_length(2)

    @staticmethod
    def test_flipped_cell_breaks_the_recurrence(
        crow_grid: OutcomeGrid,
    ) -> None:
        """A flipped cell violates the recurrence at the cell itself.

        :param crow_grid: a grid of ``{(2,1),(1,3)}``.
        """
        report = verify_exchange(crow_grid.with_flipped(11, 13))

        assert_that(report).has_counterexample_at((11, 13))

    @staticmethod
    def test_report_serialises() -> None:
        """Reports convert to plain nested data."""
        child = VerificationReport("child", False, ((1, 2),), 10, 1)
        report = VerificationReport.aggregate("parent", [child])

        assert_that(report.to_dict()).is_equal_to(
            {
                "claim": "parent",
                "passed": False,
                "counterexamples": [[1, 2]],
                "cells_checked": 10,
                "total_counterexamples": 1,
                "items": [
                    {
                        "claim": "child",
                        "passed": False,
                        "counterexamples": [[1, 2]],
                        "cells_checked": 10,
                        "total_counterexamples": 1,
                        "items": [],
                    }
                ],
            }
        )
