"""Check that boundary lines split a grid into periodic wedges.

Lines sorted by slope cut the board into ``len(lines) + 1`` wedges. A
wedge is certified when the outcomes along a bundle of three lattice
lines through its interior are eventually periodic; the bundle takes
the slope of the wedge's lower boundary (the upper one for the bottom
wedge) and is anchored a quarter of the way across the board.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

import numpy as np

from ..automaton.scheme import SegmentSpec
from ..config import DEFAULT_CONFIG, SolverConfig
from ..errors import CrossingLinesError, LineError
from ..oracle.grid import OutcomeGrid
from ..periodicity import LineSpec, PeriodReport, line_period
from .percolation import PercolationResult, n_percolates

logger = logging.getLogger("vector_subtraction.analysis")

BUNDLE_SIZE = 3


@dataclass(frozen=True)
class WedgeReport:
    """The certification of one wedge.

    :param index: the wedge number, from the bottom.
    :param segment: the wedge as a segment.
    :param bundle: the period reports of the interior lines.
    :param cells: the number of board cells strictly inside the wedge.
    :param percolation: percolation verdicts by connectivity, if asked.
    """

    index: int
    segment: SegmentSpec
    bundle: tuple[PeriodReport, ...]
    cells: int
    percolation: dict[int, PercolationResult] = field(default_factory=dict)

    @property
    def certified(self) -> bool:
        """Whether every bundle line found a period.

        :return: the verdict.
        """
        return all(report.found for report in self.bundle)

    def to_dict(self) -> dict[str, Any]:
        """Convert to plain data for JSON output.

        :return: the wedge report as a dictionary.
        """
        return {
            "index": self.index,
            "segment": str(self.segment),
            "certified": self.certified,
            "cells": self.cells,
            "bundle": [report.to_dict() for report in self.bundle],
            "percolation": {
                str(k): v.to_dict() for k, v in self.percolation.items()
            },
        }


@dataclass(frozen=True)
class SegmentationReport:
    """The certification of a whole segmentation.

    :param lines: the boundary lines, sorted by slope.
    :param wedges: one report per wedge.
    :param coverage: the fraction of the board inside certified wedges.
    :param threshold: the coverage needed to pass.
    """

    lines: tuple[LineSpec, ...]
    wedges: tuple[WedgeReport, ...]
    coverage: float
    threshold: float

    @property
    def k(self) -> int:
        """The number of segments.

        :return: the wedge count.
        """
        return len(self.wedges)

    @property
    def passed(self) -> bool:
        """Whether every wedge certified and the coverage suffices.

        :return: the verdict.
        """
        return (
            all(wedge.certified for wedge in self.wedges)
            and self.coverage >= self.threshold
        )

    def to_dict(self) -> dict[str, Any]:
        """Convert to plain data for JSON output.

        :return: the report as a dictionary.
        """
        return {
            "lines": [str(line) for line in self.lines],
            "k": self.k,
            "coverage": self.coverage,
            "threshold": self.threshold,
            "passed": self.passed,
            "wedges": [wedge.to_dict() for wedge in self.wedges],
        }


def _check_crossings(lines: Sequence[LineSpec], grid: OutcomeGrid) -> None:
    for below, above in zip(lines, lines[1:]):
        if below.slope == above.slope:
            if below.m >= above.m:
                raise CrossingLinesError(
                    f"parallel lines {below} and {above} are not ordered"
                )
            continue
        x = (below.m - above.m) / (above.slope - below.slope)
        y = below.value(x)
        if 0 < x < grid.width and 0 < y < grid.height:
            raise CrossingLinesError(
                f"lines {below} and {above} cross at "
                f"({float(x):.2f}, {float(y):.2f}) inside the "
                f"{grid.width}x{grid.height} board"
            )


def _bound(line: LineSpec | None) -> tuple[Fraction, Fraction] | None:
    return None if line is None else (line.slope, line.m)


def _bundle(
    grid: OutcomeGrid,
    slope: Fraction,
    lower: LineSpec | None,
    upper: LineSpec | None,
) -> tuple[PeriodReport, ...]:
    anchor = grid.width // 4
    low = Fraction(0) if lower is None else lower.value(anchor)
    high = Fraction(grid.height) if upper is None else upper.value(anchor)
    low = max(low, Fraction(0))
    high = min(high, Fraction(grid.height))
    reports = []
    for j in range(1, BUNDLE_SIZE + 1):
        y = math.floor(low + (high - low) * j / (BUNDLE_SIZE + 1))
        line = LineSpec(
            slope.numerator, slope.denominator, y - slope * anchor
        )
        try:
            reports.append(line_period(grid, line))
        except LineError as error:
            logger.warning("Bundle line %s unusable: %s", line, error)
            reports.append(PeriodReport(line, False, None, None, 0))
    return tuple(reports)


def verify_segmentation(
    grid: OutcomeGrid,
    lines: Sequence[LineSpec],
    *,
    connectivities: Sequence[int] = (4, 8),
    config: SolverConfig = DEFAULT_CONFIG,
) -> SegmentationReport:
    """Certify the wedges cut out by boundary lines.

    :param grid: the grid.
    :param lines: the boundary lines; they are sorted by slope.
    :param connectivities: the neighbourhoods, 4 or 8, with which to
        test each wedge for N-percolation; both by default, and an
        empty sequence skips the test.
    :param config: the coverage threshold and percolation span.

    :return: the report.

    :raises CrossingLinesError: if two neighbouring lines cross inside
        the board.
    """
    ordered = sorted(lines, key=lambda line: (line.slope, line.m))
    _check_crossings(ordered, grid)
    bounds: list[LineSpec | None] = [None, *ordered, None]
    total = grid.width * grid.height
    wedges = []
    covered = 0
    for index in range(len(ordered) + 1):
        lower, upper = bounds[index], bounds[index + 1]
        if lower is not None:
            slope = lower.slope
        elif upper is not None:
            slope = upper.slope
        else:
            slope = Fraction(1)
        segment = SegmentSpec(_bound(lower), _bound(upper))
        cells = int(np.count_nonzero(segment.mask(grid.width, grid.height)))
        verdicts: dict[int, PercolationResult] = {}
        if cells:
            verdicts = {
                connectivity: n_percolates(
                    grid, segment, connectivity, config=config
                )
                for connectivity in connectivities
            }
        wedge = WedgeReport(
            index,
            segment,
            _bundle(grid, slope, lower, upper),
            cells,
            verdicts,
        )
        if wedge.certified:
            covered += cells
        logger.info(
            "Wedge %d (%s): %d cells, certified=%s",
            index,
            segment,
            cells,
            wedge.certified,
        )
        wedges.append(wedge)
    return SegmentationReport(
        tuple(ordered),
        tuple(wedges),
        covered / total,
        config.coverage_threshold,
    )
