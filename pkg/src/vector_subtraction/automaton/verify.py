"""Compare scheme colorings with oracle grids."""

import logging
from typing import Iterable

import numpy as np

from ..config import DEFAULT_CONFIG, SolverConfig
from ..oracle.grid import OutcomeGrid
from ..oracle.verify import VerificationReport
from .scheme import ColoringScheme, run_scheme

logger = logging.getLogger("vector_subtraction.automaton")


def verify_segment(
    scheme: ColoringScheme,
    grid: OutcomeGrid,
    *,
    config: SolverConfig = DEFAULT_CONFIG,
) -> VerificationReport:
    """Check that a scheme paints exactly the P-positions of its segment.

    :param scheme: the scheme.
    :param grid: the oracle grid of the scheme's ruleset.
    :param config: the memory budget and counterexample cap.

    :return: the report; counterexamples are cells of the segment that
        are painted but N, or P but unpainted.
    """
    coloring = run_scheme(scheme, grid.width, grid.height, config=config)
    inside = scheme.segment.mask(grid.width, grid.height)
    wrong = inside & (coloring.mask() != grid.to_array())
    failing = np.argwhere(wrong)
    report = VerificationReport(
        claim=f"segment {scheme.name}",
        passed=len(failing) == 0,
        counterexamples=tuple(
            (int(x), int(y))
            for y, x in failing[: config.max_counterexamples]
        ),
        cells_checked=int(np.count_nonzero(inside)),
        total_counterexamples=len(failing),
    )
    if not report.passed:
        logger.info(
            "Scheme %r disagrees with the grid on %d of %d cells",
            scheme.name,
            report.total_counterexamples,
            report.cells_checked,
        )
    return report


def verify_segments(
    schemes: Iterable[ColoringScheme],
    grid: OutcomeGrid,
    *,
    config: SolverConfig = DEFAULT_CONFIG,
) -> VerificationReport:
    """Check several schemes, one item per scheme.

    :param schemes: the schemes.
    :param grid: the oracle grid.
    :param config: the memory budget and counterexample cap.

    :return: the aggregate report of claim ``"segmentation"``.
    """
    return VerificationReport.aggregate(
        "segmentation",
        [verify_segment(s, grid, config=config) for s in schemes],
        config,
    )
