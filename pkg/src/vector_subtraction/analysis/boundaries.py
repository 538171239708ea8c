"""Estimate the boundary lines between outcome segments.

For every reduced slope ``p/q`` the cells are sorted into diagonal strips
``q y - p x = s``. A candidate line ``y = p x / q + m`` is scored from
two bands of ``band_factor * (p + q)`` strips on either side of it:

* the contrast is the total-variation distance between the bands'
  histograms of 2x2 outcome patterns;
* the agreement is the best fraction of cells whose outcome repeats
  after ``k`` steps of ``(q, p)`` along the bands, for ``k <= 3``.

The score is the contrast times the squared agreement, so a line is
favoured where two regular patterns meet.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import numpy as np

from ..config import DEFAULT_CONFIG, SolverConfig
from ..errors import GridTooSmallError
from ..oracle.grid import OutcomeGrid
from ..periodicity import LineSpec

logger = logging.getLogger("vector_subtraction.analysis")

MIN_SIDE = 64
MAX_STEP = 3


@dataclass(frozen=True)
class BoundaryCandidate:
    """A scored candidate boundary ``y = slope x + offset``."""

    slope: Fraction
    offset: Fraction
    score: float
    contrast: float
    agreement: float

    @property
    def line(self) -> LineSpec:
        """The candidate as a line.

        :return: the line.
        """
        return LineSpec(
            self.slope.numerator, self.slope.denominator, self.offset
        )

    def value(self, x: float) -> float:
        """Evaluate the line.

        :param x: the abscissa.

        :return: the ordinate.
        """
        return float(self.slope * Fraction(x) + self.offset)

    def to_dict(self) -> dict[str, Any]:
        """Convert to plain data for JSON output.

        :return: the candidate as a dictionary.
        """
        return {
            "slope": str(self.slope),
            "offset": str(self.offset),
            "score": self.score,
            "contrast": self.contrast,
            "agreement": self.agreement,
        }


def _band_sums(cumulative: np.ndarray, start: np.ndarray, width: int) -> Any:
    limit = cumulative.shape[0] - 1
    low = np.clip(start, 0, limit)
    high = np.clip(start + width, 0, limit)
    return cumulative[high] - cumulative[low]


def _cumulative(values: np.ndarray) -> np.ndarray:
    zero = np.zeros((1,) + values.shape[1:], dtype=values.dtype)
    return np.concatenate([zero, np.cumsum(values, axis=0)])


def _best_offset(
    cells: np.ndarray, p: int, q: int, band: int
) -> BoundaryCandidate | None:
    height, width = cells.shape
    side = min(width, height)
    codes = (
        cells[:-1, :-1]
        + 2 * cells[:-1, 1:]
        + 4 * cells[1:, :-1]
        + 8 * cells[1:, 1:]
    ).astype(np.int64)
    ys, xs = np.mgrid[0 : height - 1, 0 : width - 1]
    strips = q * ys - p * xs
    lowest = int(strips.min()) - band
    span = int(strips.max()) - lowest + band + 1
    histogram = np.bincount(
        ((strips - lowest) * 16 + codes).ravel(), minlength=span * 16
    ).reshape(span, 16)
    patterns = _cumulative(histogram)
    counts = _cumulative(histogram.sum(axis=1))

    agree = []
    for k in range(1, MAX_STEP + 1):
        dx, dy = k * q, k * p
        if dx >= width or dy >= height:
            break
        same = cells[: height - dy, : width - dx] == cells[dy:, dx:]
        yy, xx = np.mgrid[0 : height - dy, 0 : width - dx]
        where = (q * yy - p * xx - lowest).ravel()
        agree.append(
            (
                _cumulative(np.bincount(where, minlength=span)),
                _cumulative(
                    np.bincount(
                        where, weights=same.ravel(), minlength=span
                    )
                ),
            )
        )

    offsets = np.arange(-(side // 4), side // 4 + 1)
    starts = q * offsets - lowest
    above = _band_sums(patterns, starts, band)
    below = _band_sums(patterns, starts - band, band)
    above_n = _band_sums(counts, starts, band)
    below_n = _band_sums(counts, starts - band, band)
    usable = (above_n >= side) & (below_n >= side)
    if not np.any(usable):
        return None
    with np.errstate(invalid="ignore", divide="ignore"):
        contrast = 0.5 * np.abs(
            above / above_n[:, None] - below / below_n[:, None]
        ).sum(axis=1)
        agreement = np.zeros(offsets.size)
        for total, matches in agree:
            n = _band_sums(total, starts - band, 2 * band)
            hits = _band_sums(matches, starts - band, 2 * band)
            agreement = np.maximum(
                agreement, np.where(n > 0, hits / np.maximum(n, 1), 0.0)
            )
    score = np.where(usable, contrast * agreement**2, -1.0)
    best = int(np.argmax(score))
    return BoundaryCandidate(
        Fraction(p, q),
        Fraction(int(offsets[best])),
        float(score[best]),
        float(contrast[best]),
        float(agreement[best]),
    )


def _near(
    first: BoundaryCandidate,
    second: BoundaryCandidate,
    width: int,
    factor: int,
) -> bool:
    slope = first.slope
    tolerance = factor * (slope.numerator + slope.denominator) / (
        slope.denominator
    )
    return all(
        abs(first.value(x) - second.value(x)) <= tolerance
        for x in (0, width - 1)
    )


def estimate_boundaries(
    grid: OutcomeGrid,
    max_pq: int | None = None,
    *,
    threshold: float | None = None,
    config: SolverConfig = DEFAULT_CONFIG,
) -> list[BoundaryCandidate]:
    """Score candidate boundary lines and keep the strong, distinct ones.

    Each slope contributes its best offset; candidates scoring below the
    threshold are dropped, as is any candidate staying within one band
    of a stronger one across the whole board.

    :param grid: the grid, at least 64 by 64.
    :param max_pq: the largest slope numerator and denominator.
    :param threshold: the smallest score kept.
    :param config: the defaults for ``max_pq``, ``threshold`` and the
        band thickness.

    :return: the candidates, strongest first.

    :raises GridTooSmallError: if the grid is smaller than 64 by 64.
    """
    if min(grid.width, grid.height) < MIN_SIDE:
        raise GridTooSmallError(
            f"boundary estimation needs a {MIN_SIDE}x{MIN_SIDE} grid, got "
            f"{grid.width}x{grid.height}"
        )
    max_pq = config.max_pq if max_pq is None else max_pq
    threshold = (
        config.boundary_threshold if threshold is None else threshold
    )
    cells = grid.to_array().astype(np.int64)
    scored = []
    slopes = 0
    for p in range(1, max_pq + 1):
        for q in range(1, max_pq + 1):
            if math.gcd(p, q) != 1:
                continue
            slopes += 1
            band = config.band_factor * (p + q)
            candidate = _best_offset(cells, p, q, band)
            if candidate is not None and candidate.score >= threshold:
                scored.append(candidate)
    scored.sort(key=lambda c: (-c.score, c.slope, c.offset))
    kept: list[BoundaryCandidate] = []
    for candidate in scored:
        if not any(
            _near(candidate, other, grid.width, config.band_factor)
            for other in kept
        ):
            kept.append(candidate)
    logger.debug(
        "%d of %d slopes scored above %.3f; %d distinct",
        len(scored),
        slopes,
        threshold,
        len(kept),
    )
    return kept
