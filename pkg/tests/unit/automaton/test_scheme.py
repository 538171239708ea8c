"""Test scheme validation and the fixpoint runner."""

from dataclasses import replace
from fractions import Fraction

import numpy as np
import pytest
from assertpy import assert_that
from hypothesis import given, settings
from hypothesis import strategies as st

from vector_subtraction.automaton import (
    Color,
    ColoringScheme,
    SegmentSpec,
    Seed,
    UpdateRule,
    arith_add,
    asym_os,
    run_scheme,
    run_schemes,
)
from vector_subtraction.config import SolverConfig
from vector_subtraction.errors import (
    BudgetExceededError,
    ColorConflictError,
    DegenerateSegmentError,
    SchemeFormatError,
)


def _two_colors(priority: tuple[str, ...] = ()) -> ColoringScheme:
    return ColoringScheme(
        "contest",
        (Color(0, "a"), Color(1, "b")),
        (Seed("a", (0, 0)), Seed("b", (1, 1))),
        (UpdateRule(frozenset({"a"}), (1, 1), "a"),),
        priority=priority,
    )


@pytest.mark.automaton
class TestValidation:
    """Malformed rules, seeds and segments are refused early."""

    @staticmethod
    @pytest.mark.parametrize("offset", [(0, 0), (-1, 2), (3, -1)])
    def test_rules_move_forward(offset: tuple[int, int]) -> None:
        """Offsets are nonnegative and nonzero.

        :param offset: the bad offset.
        """
        with pytest.raises(SchemeFormatError):
            UpdateRule(frozenset({"a"}), offset, "a")

    @staticmethod
    def test_seeds() -> None:
        """Rays are axis-parallel and seeds lie in the quadrant."""
        with pytest.raises(SchemeFormatError, match="axis-parallel"):
            Seed("a", (0, 0), (1, 1))
        with pytest.raises(SchemeFormatError, match="quadrant"):
            Seed("a", (-1, 0))

    @staticmethod
    def test_rays_stop_at_the_edge() -> None:
        """Seeded cells never leave the board."""
        ray = Seed("a", (2, 1), (1, 0))

        assert_that(list(ray.cells(5, 3))).is_equal_to(
            [(2, 1), (3, 1), (4, 1)]
        )
        assert_that(list(Seed("a", (7, 0)).cells(5, 3))).is_empty()

    @staticmethod
    def test_colors_must_be_declared() -> None:
        """Every used color has a unique declaration."""
        with pytest.raises(SchemeFormatError, match="undeclared"):
            ColoringScheme(
                "x", (Color(0, "a"),), (Seed("b", (0, 0)),), ()
            )
        with pytest.raises(SchemeFormatError, match="duplicate"):
            ColoringScheme("x", (Color(0, "a"), Color(1, "a")), (), ())
        with pytest.raises(SchemeFormatError, match="duplicate"):
            ColoringScheme("x", (Color(0, "a"), Color(0, "b")), (), ())

    @staticmethod
    def test_narrowing_segment() -> None:
        """A lower slope above the upper one is degenerate."""
        with pytest.raises(DegenerateSegmentError):
            SegmentSpec((Fraction(2), Fraction(0)), (Fraction(1), Fraction(5)))


@pytest.mark.automaton
class TestSegmentSpec:
    """Membership is strict on both sides."""

    @staticmethod
    def test_mask_agrees_with_contains() -> None:
        """The vectorised mask and the scalar test agree."""
        segment = asym_os().middle
        mask = segment.mask(30, 30)

        for y in range(30):
            for x in range(30):
                assert_that(bool(mask[y, x])).described_as(
                    f"({x}, {y})"
                ).is_equal_to(segment.contains(x, y))

    @staticmethod
    def test_boundary_cells_are_outside() -> None:
        """Cells on a bounding line belong to neither side."""
        segment = SegmentSpec(upper=(Fraction(1), Fraction(0)))

        assert_that(segment.contains(3, 3)).is_false()
        assert_that(segment.contains(3, 2)).is_true()
        assert_that(SegmentSpec().contains(0, 9)).is_true()

    @staticmethod
    def test_scaled_segments_use_blocks() -> None:
        """A scaled segment decides on the block coordinates."""
        segment = SegmentSpec(upper=(Fraction(1), Fraction(0))).scaled(2)

        assert_that(segment.contains(3, 1)).is_true()
        assert_that(segment.contains(3, 2)).is_false()
        assert_that(str(segment)).is_equal_to("- - 1 0")


@pytest.mark.automaton
class TestRunScheme:
    """The fixpoint on a board."""

    @staticmethod
    def test_without_seeds_nothing_is_painted() -> None:
        """An unseeded scheme leaves the board blank."""
        scheme = ColoringScheme(
            "blank",
            (Color(0, "a"),),
            (),
            (UpdateRule(frozenset({"a"}), (1, 0), "a"),),
        )

        assert_that(run_scheme(scheme, 10, 10).count()).is_zero()

    @staticmethod
    def test_first_generation_of_the_middle_segment() -> None:
        """Red ``(0, 0..2)`` paints green ``(5, 4..6)`` via ``+(5,4)``."""
        middle = asym_os().schemes[1]

        coloring = run_scheme(middle, 23, 21)

        for y in (4, 5, 6):
            assert_that(str(coloring.color_at(5, y))).is_equal_to("green")
        for y in (0, 1, 2):
            assert_that(str(coloring.color_at(0, y))).is_equal_to("red")
        assert_that(coloring.color_at(22, 0)).is_none()

    @staticmethod
    def test_strict_conflict_names_both_derivations() -> None:
        """A strict scheme refuses to repaint a cell."""
        with pytest.raises(ColorConflictError) as caught:
            run_scheme(_two_colors(), 5, 5)

        assert_that(caught.value.cell).is_equal_to((1, 1))
        assert_that(caught.value.existing).is_equal_to("b")
        assert_that(caught.value.incoming).is_equal_to("a")
        assert_that(str(caught.value)).contains("seed b pt 1,1")

    @staticmethod
    def test_priority_decides_conflicts() -> None:
        """The higher ranked color keeps a contested cell."""
        winner = run_scheme(_two_colors(("a", "b")), 5, 5)
        loser = run_scheme(_two_colors(("b", "a")), 5, 5)

        assert_that(str(winner.color_at(1, 1))).is_equal_to("a")
        assert_that(winner.colored_cells()).is_equal_to(
            {(i, i) for i in range(5)}
        )
        assert_that(str(loser.color_at(1, 1))).is_equal_to("b")
        assert_that(loser.colored_cells()).is_equal_to({(0, 0), (1, 1)})

    @staticmethod
    def test_painting_stays_inside_the_segment() -> None:
        """Cells outside the wedge stay blank."""
        scheme = ColoringScheme(
            "diagonal",
            (Color(0, "a"),),
            (Seed("a", (0, 0), (1, 0)),),
            (UpdateRule(frozenset({"a"}), (0, 1), "a"),),
            SegmentSpec(upper=(Fraction(1), Fraction(1))),
        )

        coloring = run_scheme(scheme, 6, 6)

        assert_that(coloring.colored_cells()).is_equal_to(
            {(x, y) for x in range(6) for y in range(6) if y <= x}
        )

    @staticmethod
    def test_scaled_scheme_paints_blocks() -> None:
        """Scaling by 2 turns each painted cell into a 2 by 2 block."""
        scheme = ColoringScheme(
            "unit",
            (Color(0, "a"),),
            (Seed("a", (0, 0)),),
            (UpdateRule(frozenset({"a"}), (1, 2), "a"),),
        )

        unit = run_scheme(scheme, 4, 8).mask()
        scaled = run_scheme(scheme.scaled(2), 8, 16).mask()

        assert_that(
            np.array_equal(np.kron(unit, np.ones((2, 2), dtype=bool)), scaled)
        ).is_true()

    @staticmethod
    def test_budget() -> None:
        """Boards beyond the memory budget are refused."""
        with pytest.raises(BudgetExceededError):
            run_scheme(
                _two_colors(),
                1024,
                1024,
                config=SolverConfig(memory_budget_bytes=1024),
            )


@pytest.mark.automaton
class TestColoring:
    """Overlaying the colorings of disjoint segments."""

    @staticmethod
    def test_merge_renumbers_the_palette() -> None:
        """Merged colorings keep each cell's color name."""
        builtin = asym_os()

        combined = run_schemes(builtin.schemes, 23, 21)

        assert_that([str(c) for c in combined.colors]).is_equal_to(
            ["gray", "red", "green", "blue", "orange", "yellow"]
        )
        assert_that(
            len({c.identifier for c in combined.colors})
        ).is_equal_to(6)
        assert_that(str(combined.color_at(2, 0))).is_equal_to("gray")
        assert_that(str(combined.color_at(0, 3))).is_equal_to("orange")

    @staticmethod
    def test_overlapping_colorings_are_refused() -> None:
        """Two colorings sharing a cell cannot be merged."""
        scheme = asym_os().schemes[0]
        coloring = run_scheme(scheme, 10, 10)

        with pytest.raises(ValueError, match="overlapping"):
            coloring.merge(coloring)
        with pytest.raises(ValueError, match="different boards"):
            coloring.merge(run_scheme(scheme, 11, 10))

    @staticmethod
    def test_no_schemes() -> None:
        """At least one scheme is needed."""
        with pytest.raises(ValueError):
            run_schemes([], 5, 5)


@pytest.mark.automaton
@settings(max_examples=25, deadline=None)
@given(st.data())
def test_fixpoint_ignores_declaration_order(data: st.DataObject) -> None:
    """Shuffled seeds and rules paint the same cells.

    :param data: the hypothesis data source.
    """
    for scheme in asym_os().schemes + arith_add().schemes:
        shuffled = replace(
            scheme,
            seeds=tuple(data.draw(st.permutations(scheme.seeds))),
            rules=tuple(data.draw(st.permutations(scheme.rules))),
        )

        assert_that(
            np.array_equal(
                run_scheme(scheme, 40, 40).identifiers,
                run_scheme(shuffled, 40, 40).identifiers,
            )
        ).described_as(scheme.name).is_true()
