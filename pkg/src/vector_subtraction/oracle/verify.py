"""Grid-level checks of the P-to-P lemmas.

Each check scans every base position whose referenced cells all lie in
the grid and collects the positions where an implication fails. A
claim with several items returns one :py:class:`VerificationReport`
per item, nested in an aggregate report.

.. code-block:: python

    from assertpy import assert_that
    from vector_subtraction.oracle import (
        compute_grid, verify_three_move_lemmas
    )

    grid = compute_grid(ruleset, 100, 100)
    report = verify_three_move_lemmas(grid, ruleset)
    assert_that(report).is_verified()
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from ..config import DEFAULT_CONFIG, SolverConfig
from ..errors import RulesetShapeError
from ..model import Position, Ruleset, classify
from .grid import OutcomeGrid

logger = logging.getLogger("vector_subtraction.oracle")

Offset = tuple[int, int]
Cell = Callable[[Offset], np.ndarray]


@dataclass(frozen=True)
class VerificationReport:
    """The verdict of a grid check.

    :param claim: an identifier of the checked claim.
    :param passed: whether no counterexample was found.
    :param counterexamples: failing base positions, capped in number.
    :param cells_checked: the number of base positions examined.
    :param total_counterexamples: the uncapped number of failures.
    :param items: the reports of the individual items of a claim.
    """

    claim: str
    passed: bool
    counterexamples: tuple[Position, ...] = ()
    cells_checked: int = 0
    total_counterexamples: int = 0
    items: tuple["VerificationReport", ...] = field(default=())

    @classmethod
    def aggregate(
        cls,
        claim: str,
        items: list["VerificationReport"],
        config: SolverConfig = DEFAULT_CONFIG,
    ) -> "VerificationReport":
        """Combine item reports; the claim passes when every item does.

        :param claim: the identifier of the combined claim.
        :param items: the item reports.
        :param config: the counterexample cap.

        :return: the combined report.
        """
        union: list[Position] = []
        for item in items:
            for position in item.counterexamples:
                if position not in union:
                    union.append(position)
        return cls(
            claim=claim,
            passed=all(item.passed for item in items),
            counterexamples=tuple(union[: config.max_counterexamples]),
            cells_checked=sum(item.cells_checked for item in items),
            total_counterexamples=sum(
                item.total_counterexamples for item in items
            ),
            items=tuple(items),
        )

    def item(self, claim: str) -> "VerificationReport":
        """Find an item report by claim.

        :param claim: the claim identifier.

        :return: the item report.

        :raises KeyError: if no item has that claim.
        """
        for item in self.items:
            if item.claim == claim:
                return item
        raise KeyError(claim)

    def to_dict(self) -> dict[str, Any]:
        """Convert to plain data for JSON output.

        :return: the report as a dictionary.
        """
        return {
            "claim": self.claim,
            "passed": self.passed,
            "counterexamples": [list(p) for p in self.counterexamples],
            "cells_checked": self.cells_checked,
            "total_counterexamples": self.total_counterexamples,
            "items": [item.to_dict() for item in self.items],
        }


def _scan(
    claim: str,
    cells: np.ndarray,
    offsets: list[Offset],
    violation: Callable[[Cell], np.ndarray],
    config: SolverConfig,
) -> VerificationReport:
    """Evaluate a violation mask over every fully covered base position.

    ``violation`` receives an accessor mapping an offset to the boolean
    P-array of the cells at that offset from each base position.
    """
    height, width = cells.shape
    offsets = offsets + [(0, 0)]
    x_lo = max(0, -min(dx for dx, _ in offsets))
    y_lo = max(0, -min(dy for _, dy in offsets))
    x_hi = width - max(0, max(dx for dx, _ in offsets))
    y_hi = height - max(0, max(dy for _, dy in offsets))
    if x_hi <= x_lo or y_hi <= y_lo:
        logger.warning("Grid too small to check %s", claim)
        return VerificationReport(claim=claim, passed=True)

    def cell(offset: Offset) -> np.ndarray:
        dx, dy = offset
        return cells[y_lo + dy : y_hi + dy, x_lo + dx : x_hi + dx]

    failing = np.argwhere(violation(cell))
    positions = [
        (int(x) + x_lo, int(y) + y_lo)
        for y, x in failing[: config.max_counterexamples]
    ]
    report = VerificationReport(
        claim=claim,
        passed=len(failing) == 0,
        counterexamples=tuple(positions),
        cells_checked=(x_hi - x_lo) * (y_hi - y_lo),
        total_counterexamples=len(failing),
    )
    logger.debug(
        "%s: %d cells, %d counterexamples",
        claim,
        report.cells_checked,
        report.total_counterexamples,
    )
    return report


def _grid_ruleset(grid: OutcomeGrid, ruleset: Ruleset | None) -> Ruleset:
    chosen = ruleset if ruleset is not None else grid.ruleset
    if chosen is None or chosen.dimension != 2:
        raise RulesetShapeError("the check needs the grid's planar ruleset")
    return chosen


def verify_ptop(
    grid: OutcomeGrid,
    ruleset: Ruleset | None = None,
    *,
    config: SolverConfig = DEFAULT_CONFIG,
) -> VerificationReport:
    """Check that translating by ``s1 + s2`` preserves outcomes.

    :param grid: the grid.
    :param ruleset: the two-move ruleset, by default the grid's.
    :param config: the counterexample cap.

    :return: the report; counterexamples are positions ``x`` with
        ``o(x) != o(x + s1 + s2)``.

    :raises RulesetShapeError: if the ruleset does not have two moves.
    """
    ruleset = _grid_ruleset(grid, ruleset)
    if len(ruleset) != 2:
        raise RulesetShapeError(
            f"the P-to-P check needs two moves, got {len(ruleset)}"
        )
    (a, b), (c, d) = ruleset.moves
    shift = (a + c, b + d)
    return _scan(
        "p-to-p",
        grid.to_array(),
        [shift],
        lambda cell: cell((0, 0)) != cell(shift),
        config,
    )


def _additive_items(
    cells: np.ndarray,
    first: Offset,
    second: Offset,
    config: SolverConfig,
) -> list[VerificationReport]:
    a, b = first
    c, d = second
    u = (2 * a + c, 2 * b + d)
    v = (2 * c + a, 2 * d + b)
    both = (2 * a + 2 * c, 2 * b + 2 * d)
    twice_first = (2 * a, 2 * b)
    twice_second = (2 * c, 2 * d)
    origin = (0, 0)
    return [
        _scan(
            "additive-lemma",
            cells,
            [u, v],
            lambda p: p(u) & p(v) & ~p(origin),
            config,
        ),
        _scan(
            "additive-i",
            cells,
            [u, v, both],
            lambda p: p(origin) & ~p(both) & ~(p(u) | p(v)),
            config,
        ),
        _scan(
            "additive-ii",
            cells,
            [u, twice_first],
            lambda p: p(origin) & ~p(u) & ~p(twice_first),
            config,
        ),
        _scan(
            "additive-iii",
            cells,
            [v, twice_second],
            lambda p: p(origin) & ~p(v) & ~p(twice_second),
            config,
        ),
        _scan(
            "additive-iv",
            cells,
            [u, v, both],
            lambda p: p(origin) & ~p(u) & ~p(v) & ~p(both),
            config,
        ),
    ]


def _asymmetric_items(
    cells: np.ndarray,
    a: int,
    b: int,
    c: int,
    d: int,
    config: SolverConfig,
) -> list[VerificationReport]:
    # moves (a, b), (c, b+d), (a+c, d)
    far = (2 * a + 2 * c, 2 * d)
    left = (a + 2 * c, 2 * d - b)
    right = (2 * a + c, d - b)
    up = (a + c, 2 * b + d)
    up_target = (0, 2 * b)
    side = (2 * a + c, b + d)
    side_target = (2 * a, 0)
    origin = (0, 0)
    return [
        _scan(
            "asymmetric-i",
            cells,
            [far, left, right],
            lambda p: p(origin) & ~p(far) & ~(p(left) | p(right)),
            config,
        ),
        _scan(
            "asymmetric-ii",
            cells,
            [up, up_target],
            lambda p: p(origin) & ~p(up) & ~p(up_target),
            config,
        ),
        _scan(
            "asymmetric-iii",
            cells,
            [side, side_target],
            lambda p: p(origin) & ~p(side) & ~p(side_target),
            config,
        ),
        _scan(
            "asymmetric-iv",
            cells,
            [far, left, right],
            lambda p: p(origin) & ~p(left) & ~p(right) & ~p(far),
            config,
        ),
    ]


def _additive_pair(ruleset: Ruleset) -> tuple[Offset, Offset]:
    flags = classify(ruleset)
    first, second = (m for m in ruleset if m != flags.sum_move)
    return (first[0], first[1]), (second[0], second[1])


def verify_three_move_lemmas(
    grid: OutcomeGrid,
    ruleset: Ruleset | None = None,
    *,
    config: SolverConfig = DEFAULT_CONFIG,
) -> VerificationReport:
    """Check the P-to-P lemmas of three-move rulesets.

    Additive rulesets ``{(a,b), (c,d), (a+c,b+d)}`` get the additive
    lemma and its items (i) to (iv); rulesets
    ``{(a,b), (a+c,b+c), (a+2c,b+2c)}`` get the twin progression item;
    asymmetric additive rulesets ``{(a,b), (c,b+d), (a+c,d)}`` get their
    items (i) to (iv). Every applicable item is reported separately.

    :param grid: the grid.
    :param ruleset: the ruleset, by default the grid's.
    :param config: the counterexample cap.

    :return: the aggregate report.

    :raises RulesetShapeError: if the ruleset has none of these shapes.
    """
    ruleset = _grid_ruleset(grid, ruleset)
    flags = classify(ruleset)
    cells = grid.to_array()
    items: list[VerificationReport] = []
    if flags.additive:
        first, second = _additive_pair(ruleset)
        items += _additive_items(cells, first, second, config)
    if flags.twin_progression and flags.progression_step is not None:
        a, b = ruleset.moves[0]
        step = flags.progression_step
        target = (2 * a + 2 * step, 2 * b + 2 * step)
        items.append(
            _scan(
                "twin-progression",
                cells,
                [target],
                lambda p: p((0, 0)) & ~p(target),
                config,
            )
        )
    if flags.asymmetric_witness is not None:
        u, v, w = flags.asymmetric_witness
        items += _asymmetric_items(cells, u[0], u[1], v[0], w[1], config)
    if not items:
        raise RulesetShapeError(
            f"{ruleset} is neither additive, asymmetric additive nor a "
            "twin progression"
        )
    return VerificationReport.aggregate("three-move-lemmas", items, config)


def verify_additive_converse(
    grid: OutcomeGrid,
    ruleset: Ruleset | None = None,
    *,
    config: SolverConfig = DEFAULT_CONFIG,
) -> VerificationReport:
    """Check the converse of the additive lemma.

    The converse, "``(x,y)`` in P implies both ``(x+2a+c, y+2b+d)`` and
    ``(x+2c+a, y+2d+b)`` in P", does not hold in general; this check
    locates where it breaks.

    :param grid: the grid.
    :param ruleset: an additive ruleset, by default the grid's.
    :param config: the counterexample cap.

    :return: the report.

    :raises RulesetShapeError: if the ruleset is not additive.
    """
    ruleset = _grid_ruleset(grid, ruleset)
    if not classify(ruleset).additive:
        raise RulesetShapeError(f"{ruleset} is not additive")
    (a, b), (c, d) = _additive_pair(ruleset)
    u = (2 * a + c, 2 * b + d)
    v = (2 * c + a, 2 * d + b)
    return _scan(
        "additive-converse",
        grid.to_array(),
        [u, v],
        lambda p: p((0, 0)) & ~(p(u) & p(v)),
        config,
    )


def verify_exchange(
    grid: OutcomeGrid,
    ruleset: Ruleset | None = None,
    *,
    config: SolverConfig = DEFAULT_CONFIG,
) -> VerificationReport:
    """Check the defining recurrence over the whole grid.

    No move joins two P-positions, and every N-position has a move to a
    P-position.

    :param grid: the grid.
    :param ruleset: the ruleset, by default the grid's.
    :param config: the counterexample cap.

    :return: the aggregate of the two checks.
    """
    ruleset = _grid_ruleset(grid, ruleset)
    cells = grid.to_array()
    height, width = cells.shape
    independent = np.zeros_like(cells)
    reaches_p = np.zeros_like(cells)
    for sx, sy in ruleset:
        if sx >= width or sy >= height:
            continue
        target = cells[: height - sy, : width - sx]
        source = cells[sy:, sx:]
        independent[sy:, sx:] |= source & target
        reaches_p[sy:, sx:] |= target

    def collect(claim: str, mask: np.ndarray) -> VerificationReport:
        failing = np.argwhere(mask)
        return VerificationReport(
            claim=claim,
            passed=failing.size == 0,
            counterexamples=tuple(
                (int(x), int(y))
                for y, x in failing[: config.max_counterexamples]
            ),
            cells_checked=cells.size,
            total_counterexamples=len(failing),
        )

    return VerificationReport.aggregate(
        "exchange",
        [
            collect("p-reaches-no-p", independent),
            collect("n-reaches-p", ~cells & ~reaches_p),
        ],
        config,
    )
