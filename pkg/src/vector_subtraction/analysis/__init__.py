"""Geometry of outcome grids: boundaries, segmentations, percolation.

.. code-block:: python

    from vector_subtraction.analysis import (
        estimate_boundaries, verify_segmentation
    )
    from vector_subtraction.model import parse_ruleset
    from vector_subtraction.oracle import compute_grid

    grid = compute_grid(parse_ruleset("1,2;2,3;3,1"), 200, 200)
    lines = [c.line for c in estimate_boundaries(grid)[:2]]
    report = verify_segmentation(grid, lines)
    print(report.k, report.coverage, report.passed)

Estimated offsets are rounded to whole cells, so hand-written lines
such as ``LineSpec.parse("9/8+2")`` give tighter wedges.
"""

from .boundaries import BoundaryCandidate, estimate_boundaries
from .percolation import PercolationResult, n_percolates
from .segmentation import (
    SegmentationReport,
    WedgeReport,
    verify_segmentation,
)

__all__ = [
    "BoundaryCandidate",
    "PercolationResult",
    "SegmentationReport",
    "WedgeReport",
    "estimate_boundaries",
    "n_percolates",
    "verify_segmentation",
]
