"""Check the builtin schemes against oracle grids."""

import itertools

import numpy as np
import pytest
from assertpy import assert_that

from vector_subtraction.automaton import (
    arith_add,
    asym_os,
    builtin_schemes,
    resolve_builtin,
    run_scheme,
    symadd,
    verify_segment,
    verify_segments,
)
from vector_subtraction.errors import (
    SchemeFormatError,
    UnsupportedRegimeError,
)
from vector_subtraction.model import parse_ruleset
from vector_subtraction.oracle import compute_grid


@pytest.mark.automaton
class TestBuiltins:
    """Every builtin paints exactly the P-positions of its ruleset."""

    @staticmethod
    @pytest.mark.parametrize(("width", "height"), [(23, 21), (92, 84)])
    def test_asym_os(width: int, height: int) -> None:
        """The three segments of ``{(1,2),(2,3),(3,1)}``.

        :param width: the board width.
        :param height: the board height.
        """
        builtin = asym_os()
        grid = compute_grid(builtin.ruleset, width, height)

        assert_that(verify_segments(builtin.schemes, grid)).is_verified()

    @staticmethod
    def test_asym_os_cell_counts() -> None:
        """Each segment paints exactly its P-cells on the 23 by 21 board."""
        builtin = asym_os()
        cells = compute_grid(builtin.ruleset, 23, 21).to_array() != 0
        masks = [s.segment.mask(23, 21) for s in builtin.schemes]

        counts = [run_scheme(s, 23, 21).count() for s in builtin.schemes]

        assert_that(counts).is_equal_to([55, 54, 46])
        assert_that([int(m.sum()) for m in masks]).is_equal_to([193, 130, 160])
        assert_that(counts).is_equal_to(
            [int(np.count_nonzero(cells & m)) for m in masks]
        )

    @staticmethod
    @pytest.mark.parametrize("side", [26, 104])
    def test_symadd_one_two(side: int) -> None:
        """``{(1,2),(2,1),(3,3)}`` on square boards.

        :param side: the board side.
        """
        builtin = symadd(1, 2)
        grid = compute_grid(builtin.ruleset, side, side)

        assert_that(verify_segments(builtin.schemes, grid)).is_verified()

    @staticmethod
    def test_symadd_whole_regime() -> None:
        """Every ``b/2 <= a < b <= 6`` is painted correctly."""
        for a, b in itertools.combinations(range(1, 7), 2):
            if b > 2 * a:
                continue
            builtin = symadd(a, b)
            side = 20 * (a + b)
            grid = compute_grid(builtin.ruleset, side, side)

            assert_that(
                verify_segments(builtin.schemes, grid)
            ).described_as(builtin.name).is_verified()

    @staticmethod
    def test_symadd_seeds_the_square() -> None:
        """The blue seeds of ``symadd:1,2`` are the square ``x, y < 2``."""
        (scheme,) = symadd(1, 2).schemes

        blue = {seed.origin for seed in scheme.seeds if seed.color == "blue"}

        assert_that(blue).is_equal_to({(0, 0), (0, 1), (1, 0), (1, 1)})
        assert_that(scheme.priority).is_equal_to(("blue", "gray", "silver"))

    @staticmethod
    @pytest.mark.parametrize(("a", "b"), [(1, 5), (3, 3), (0, 1)])
    def test_symadd_outside_its_regime(a: int, b: int) -> None:
        """``b > 2a`` and unordered pairs are refused.

        :param a: the smaller component.
        :param b: the larger component.
        """
        with pytest.raises(UnsupportedRegimeError):
            symadd(a, b)

    @staticmethod
    @pytest.mark.parametrize(("scale", "side"), [(1, 50), (1, 200), (2, 200)])
    def test_arith_add(scale: int, side: int) -> None:
        """``{(a,2a),(3a,4a),(4a,6a)}`` in five colors.

        :param scale: the ruleset parameter ``a``.
        :param side: the board side.
        """
        builtin = arith_add(scale)
        grid = compute_grid(builtin.ruleset, side, side)

        assert_that(verify_segments(builtin.schemes, grid)).is_verified()

    @staticmethod
    def test_arith_add_rules() -> None:
        """The middle scheme propagates blue by ``+(6,8)``."""
        middle = arith_add().schemes[1]

        assert_that([str(rule) for rule in middle.rules]).contains(
            "blue +6,8 -> blue"
        )
        assert_that(arith_add(3).ruleset).is_equal_to(
            parse_ruleset("3,6;9,12;12,18")
        )

    @staticmethod
    def test_wrong_ruleset_is_caught() -> None:
        """A scheme checked against another ruleset's grid fails."""
        scheme = asym_os().schemes[1]
        grid = compute_grid(parse_ruleset("1,2;2,3"), 40, 40)

        report = verify_segment(scheme, grid)

        assert_that(report.passed).is_false()
        assert_that(report.total_counterexamples).is_positive()
        assert_that(report.claim).is_equal_to("segment asym-os-middle")


@pytest.mark.automaton
class TestResolveBuiltin:
    """Builtins are named on the command line."""

    @staticmethod
    @pytest.mark.parametrize(
        ("text", "name"),
        [
            ("asym-os", "asym-os"),
            ("symadd:2,3", "symadd:2,3"),
            ("arith-add", "arith-add:1"),
            ("arith-add:4", "arith-add:4"),
        ],
    )
    def test_names(text: str, name: str) -> None:
        """Parameters follow a colon.

        :param text: the builtin text.
        :param name: the resolved name.
        """
        assert_that(resolve_builtin(text).name).is_equal_to(name)

    @staticmethod
    @pytest.mark.parametrize(
        "text", ["nope", "symadd", "symadd:a,b", "asym-os:1"]
    )
    def test_bad_names(text: str) -> None:
        """Unknown names and bad parameters are format errors.

        :param text: the builtin text.
        """
        with pytest.raises(SchemeFormatError):
            resolve_builtin(text)

    @staticmethod
    def test_catalog() -> None:
        """The catalog lists the three families."""
        assert_that(builtin_schemes()).contains_only(
            "asym-os", "symadd", "arith-add"
        )
        assert_that(builtin_schemes()["symadd"](2, 3).name).is_equal_to(
            "symadd:2,3"
        )
