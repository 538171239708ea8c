"""Eventual period detection for outcome sequences, rows, columns and lines.

A finite window can only suggest periodicity, so a candidate preperiod
``x'`` and period ``T`` are accepted only when the relation
``o(i) = o(i + T)`` holds on the entire suffix from ``x'`` and the window
leaves room for two full periods plus the largest move component after
``x'``. Among accepted candidates the smallest ``T`` wins, then the
smallest ``x'``.

Candidate periods are tried in increasing order, each with one vectorised
comparison of the window against its shift; a search over ``n``
positions that ends at period ``T`` costs ``O(T n)``, which suits grids
of a few thousand cells per line.

.. code-block:: python

    from assertpy import assert_that
    from vector_subtraction.model import parse_ruleset
    from vector_subtraction.oracle import compute_sequence
    from vector_subtraction.periodicity import find_eventual_period

    sequence = compute_sequence(parse_ruleset("2;5;7"), 200)
    assert_that(find_eventual_period(sequence)).has_period(22, preperiod=0)

Lines ``y = p x / q + m`` are read at their lattice points, so their
periods are multiples of ``q``.
"""

import logging
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable

import numpy as np

from .errors import GridTooSmallError, LineError
from .model import U64_MAX, Ruleset
from .oracle.grid import OutcomeGrid, OutcomeSequence

logger = logging.getLogger("vector_subtraction.periodicity")


@dataclass(frozen=True)
class LineSpec:
    """The rational line ``y = p x / q + m``.

    The slope is stored reduced; ``p`` and ``q`` must be positive.
    """

    p: int
    q: int
    m: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        if self.p <= 0 or self.q <= 0:
            raise LineError(
                f"a line needs a positive slope p/q, got {self.p}/{self.q}; "
                "rows are handled by row_periods"
            )
        divisor = math.gcd(self.p, self.q)
        object.__setattr__(self, "p", self.p // divisor)
        object.__setattr__(self, "q", self.q // divisor)
        object.__setattr__(self, "m", Fraction(self.m))

    _PATTERN = re.compile(
        r"^\s*(\d+)(?:/(\d+))?\s*(?:([+-])\s*(\d+(?:/\d+)?))?\s*$"
    )

    @classmethod
    def parse(cls, text: str) -> "LineSpec":
        """Parse ``"p/q+m"``, e.g. ``"9/8+2"`` or ``"4/5-4/5"``.

        :param text: the line text.

        :return: the line.

        :raises LineError: if the text is malformed.
        """
        match = cls._PATTERN.match(text)
        if match is None:
            raise LineError(f"malformed line {text!r}, expected p/q+m")
        p, q, sign, offset = match.groups()
        m = Fraction(offset) if offset else Fraction(0)
        return cls(int(p), int(q or 1), -m if sign == "-" else m)

    @property
    def slope(self) -> Fraction:
        """The slope ``p/q``.

        :return: the slope.
        """
        return Fraction(self.p, self.q)

    def value(self, x: int | Fraction) -> Fraction:
        """Evaluate the line.

        :param x: the abscissa.

        :return: ``p x / q + m``.
        """
        return self.slope * x + self.m

    def first_lattice_x(self) -> int:
        """Find the smallest ``x >= 0`` where the line is integral.

        :return: the abscissa; further lattice points follow every ``q``.

        :raises LineError: if the line never meets the lattice.
        """
        for x in range(self.q):
            if self.value(x).denominator == 1:
                return x
        raise LineError(f"the line {self} has no lattice points")

    def lattice_points(
        self, width: int, height: int
    ) -> tuple[np.ndarray, np.ndarray]:
        """List the lattice points of the line inside a box.

        :param width: the number of columns.
        :param height: the number of rows.

        :return: the ``x`` and ``y`` coordinates, by increasing ``x``.
        """
        start = self.first_lattice_x()
        xs = np.arange(start, width, self.q, dtype=np.int64)
        base = self.value(start)
        ys = base.numerator + self.p * (xs - start) // self.q
        inside = (ys >= 0) & (ys < height)
        return xs[inside], ys[inside]

    def __str__(self) -> str:
        sign = "-" if self.m < 0 else "+"
        return f"{self.p}/{self.q}{sign}{abs(self.m)}"


@dataclass(frozen=True)
class PeriodReport:
    """The outcome of a period search.

    :param index: the row or column number, the line, or ``None`` for a
        sequence.
    :param found: whether a period was certified.
    :param preperiod: where the periodic part starts, if found.
    :param period: the period, if found.
    :param search_bound: the number of positions examined.
    :param bound: the theoretical bound on the period, when one applies.
    """

    index: Any
    found: bool
    preperiod: int | None
    period: int | None
    search_bound: int
    bound: int | None = None

    @property
    def respects_bound(self) -> bool:
        """Tell whether a certified period stays within the bound.

        :return: ``True`` when no bound applies or the period is within.
        """
        if self.bound is None or self.period is None:
            return True
        return self.period <= self.bound

    def to_dict(self) -> dict[str, Any]:
        """Convert to plain data for CSV and JSON output.

        :return: the report as a dictionary.
        """
        return {
            "index": None if self.index is None else str(self.index),
            "found": self.found,
            "preperiod": self.preperiod,
            "period": self.period,
            "search_bound": self.search_bound,
            "bound": self.bound,
        }


def _search(values: np.ndarray, margin: int) -> tuple[int, int] | None:
    length = int(values.size)
    period = 1
    while 2 * period + margin <= length:
        mismatches = np.flatnonzero(values[:-period] != values[period:])
        start = int(mismatches[-1]) + 1 if mismatches.size else 0
        if start + 2 * period + margin <= length:
            return start, period
        period += 1
    return None


def _margin(ruleset: Ruleset | None) -> int:
    return 0 if ruleset is None else ruleset.max_component


def find_eventual_period(sequence: OutcomeSequence) -> PeriodReport:
    """Find the eventual period of a one-dimensional outcome sequence.

    :param sequence: the sequence.

    :return: the report.

    :raises GridTooSmallError: if the sequence is shorter than two.
    """
    if len(sequence) < 2:
        raise GridTooSmallError("period search needs two positions")
    result = _search(sequence.values, _margin(sequence.ruleset))
    if result is None:
        logger.warning(
            "No period certified within %d positions", len(sequence)
        )
        return PeriodReport(None, False, None, None, len(sequence))
    return PeriodReport(None, True, result[0], result[1], len(sequence))


def row_period_bound(ruleset: Ruleset, axis: int = 0) -> int:
    """Bound the period of the first row (or column) by ``A 2^A``.

    :param ruleset: a planar ruleset.
    :param axis: 0 for rows, where ``A`` is the largest x-component, 1
        for columns, where it is the largest y-component.

    :return: the bound, at least 1.
    """
    largest = max(move[axis] for move in ruleset)
    return max(1, largest * 2**largest)


def _line_reports(
    grid: OutcomeGrid,
    indices: Iterable[int],
    axis: int,
) -> list[PeriodReport]:
    ruleset = grid.ruleset
    margin = _margin(ruleset)
    name = "row" if axis == 0 else "column"
    reports = []
    for index in indices:
        values = grid.row(index) if axis == 0 else grid.column(index)
        result = _search(values, margin)
        bound = None
        if index == 0 and ruleset is not None:
            bound = row_period_bound(ruleset, axis)
        if result is None:
            logger.warning(
                "No period certified for %s %d within %d cells; "
                "compute a larger grid",
                name,
                index,
                values.size,
            )
            reports.append(
                PeriodReport(index, False, None, None, values.size, bound)
            )
            continue
        report = PeriodReport(
            index, True, result[0], result[1], values.size, bound
        )
        if not report.respects_bound:
            logger.warning(
                "Period %d of %s 0 exceeds the bound %d",
                report.period,
                name,
                bound,
            )
        reports.append(report)
    return reports


def row_periods(
    grid: OutcomeGrid, rows: Iterable[int] | None = None
) -> list[PeriodReport]:
    """Find the eventual period of each requested row.

    Row 0 also carries the bound of :py:func:`row_period_bound`.

    :param grid: the grid.
    :param rows: the row indices, all rows by default.

    :return: one report per row.
    """
    return _line_reports(
        grid, range(grid.height) if rows is None else rows, axis=0
    )


def column_periods(
    grid: OutcomeGrid, columns: Iterable[int] | None = None
) -> list[PeriodReport]:
    """Find the eventual period of each requested column.

    :param grid: the grid.
    :param columns: the column indices, all columns by default.

    :return: one report per column.
    """
    return _line_reports(
        grid, range(grid.width) if columns is None else columns, axis=1
    )


def superperiod(periods: Iterable[int], rows: int) -> int:
    """Multiply the periods of ``rows`` consecutive rows.

    :param periods: the periods of the rows ``y'-B .. y'-1``.
    :param rows: the number ``B`` of rows.

    :return: the product.

    :raises ValueError: if the count differs from ``rows`` or a period is
        not positive.
    :raises OverflowError: if the product does not fit in 64 bits.
    """
    values = list(periods)
    if len(values) != rows:
        raise ValueError(f"expected {rows} periods, got {len(values)}")
    if any(p < 1 for p in values):
        raise ValueError(f"periods must be positive, got {values}")
    product = math.prod(values)
    if product > U64_MAX:
        raise OverflowError(f"the superperiod of {values} exceeds 64 bits")
    return product


def line_period(grid: OutcomeGrid, line: LineSpec) -> PeriodReport:
    """Find the eventual period of the outcomes along a rational line.

    :param grid: the grid.
    :param line: the line.

    :return: the report; preperiod and period are measured along ``x``,
        the preperiod from the first lattice point inside the grid.

    :raises LineError: if fewer than two lattice points lie in the grid.
    """
    xs, ys = line.lattice_points(grid.width, grid.height)
    if xs.size < 2:
        raise LineError(
            f"the line {line} meets the {grid.width}x{grid.height} grid "
            f"in {xs.size} lattice point(s)"
        )
    values = grid.to_array()[ys, xs]
    result = _search(values, _margin(grid.ruleset))
    if result is None:
        logger.debug("No period certified along %s", line)
        return PeriodReport(line, False, None, None, int(xs.size))
    start, period = result
    return PeriodReport(
        line,
        True,
        int(xs[start] - xs[0]),
        period * line.q,
        int(xs.size),
    )
