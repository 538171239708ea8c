"""Custom `assertpy <https://assertpy.github.io/index.html>`_ assertions.

The assertions cover the objects this package produces: verification
reports, outcome grids and sequences, and period reports.

.. code-block:: python

    from assertpy import assert_that
    import vector_subtraction.oracle  # registers the assertions

    assert_that(report).described_as(
        "The P-to-P lemma should hold on the whole board"
    ).is_verified()

    assert_that(grid).has_outcome_at((3, 5), "P").matches_cells(
        expected_p_cells
    )

    assert_that(period_report).has_period(22, preperiod=0)

**NOTE**: the assertions are registered with ``add_extension`` when
:py:mod:`vector_subtraction.oracle` is imported.
"""

from typing import Any, Iterable, Sequence

from ..model import Outcome
from .grid import OutcomeGrid, OutcomeSequence
from .verify import VerificationReport

MAX_LISTED = 10


def _listing(cells: Iterable[Any]) -> str:
    ordered = sorted(cells)
    shown = ", ".join(str(c) for c in ordered[:MAX_LISTED])
    if len(ordered) > MAX_LISTED:
        shown += f", ... ({len(ordered) - MAX_LISTED} more)"
    return shown


def _get_report(assertpy_context: Any) -> VerificationReport:
    if not isinstance(assertpy_context.val, VerificationReport):
        raise ValueError(
            "This assertion needs a 'VerificationReport'. Try "
            "assert_that(report).is_verified()"
        )
    return assertpy_context.val


def is_verified(assertpy_context: Any) -> Any:
    """Assert that a verification report passed.

    :param assertpy_context: The `assertpy` context object
        (It is passed automatically)

    :return: The `assertpy` context object.
    """
    report = _get_report(assertpy_context)
    if not report.passed:
        failing = [item.claim for item in report.items if not item.passed]
        assertpy_context.error(
            f"Expected claim '{report.claim}' to hold, but found "
            f"{report.total_counterexamples} counterexample(s)"
            + (f" in items {failing}" if failing else "")
            + f": {_listing(report.counterexamples)}"
        )
    return assertpy_context


def has_counterexample_at(
    assertpy_context: Any, position: Sequence[int]
) -> Any:
    """Assert that a verification report lists a counterexample.

    :param assertpy_context: The `assertpy` context object
        (It is passed automatically)
    :param position: the expected failing position.

    :return: The `assertpy` context object.
    """
    report = _get_report(assertpy_context)
    if tuple(position) not in report.counterexamples:
        assertpy_context.error(
            f"Expected claim '{report.claim}' to fail at {tuple(position)}, "
            f"but its counterexamples are "
            f"[{_listing(report.counterexamples)}]"
        )
    return assertpy_context


def has_outcome_at(
    assertpy_context: Any, position: Sequence[int] | int, outcome: Any
) -> Any:
    """Assert the outcome of a position of a grid or sequence.

    :param assertpy_context: The `assertpy` context object
        (It is passed automatically)
    :param position: ``(x, y)`` for grids, an integer for sequences.
    :param outcome: an :py:class:`~vector_subtraction.model.Outcome` or
        its name ``"P"`` or ``"N"``.

    :return: The `assertpy` context object.

    :raises ValueError: if the value is neither a grid nor a sequence.
    """
    expected = Outcome(str(outcome))
    target = assertpy_context.val
    if isinstance(target, OutcomeGrid) and not isinstance(position, int):
        x, y = position
        actual = target.outcome(x, y)
    elif isinstance(target, OutcomeSequence) and isinstance(position, int):
        actual = target.outcome(position)
    else:
        raise ValueError(
            "has_outcome_at needs an OutcomeGrid with an (x, y) position "
            "or an OutcomeSequence with an integer position"
        )
    if actual is not expected:
        assertpy_context.error(
            f"Expected position {position} to be {expected}, "
            f"but it is {actual}"
        )
    return assertpy_context


def matches_cells(
    assertpy_context: Any, p_cells: Iterable[Sequence[int]]
) -> Any:
    """Assert that the P-positions of a grid are exactly the given cells.

    :param assertpy_context: The `assertpy` context object
        (It is passed automatically)
    :param p_cells: the expected P-positions ``(x, y)``.

    :return: The `assertpy` context object.

    :raises ValueError: if the value is not a grid.
    """
    grid = assertpy_context.val
    if not isinstance(grid, OutcomeGrid):
        raise ValueError("matches_cells needs an OutcomeGrid")
    expected = {(int(x), int(y)) for x, y in p_cells}
    actual = grid.p_cells()
    missing = expected - actual
    extra = actual - expected
    if missing or extra:
        message = (
            f"Expected the {grid.width}x{grid.height} grid to match "
            f"{len(expected)} P-cells, but {len(missing) + len(extra)} "
            "cells differ."
        )
        if missing:
            message += f"\nExpected P but found N: {_listing(missing)}"
        if extra:
            message += f"\nExpected N but found P: {_listing(extra)}"
        assertpy_context.error(message)
    return assertpy_context


def has_period(
    assertpy_context: Any, period: int, preperiod: int | None = None
) -> Any:
    """Assert that a period report found the given period.

    :param assertpy_context: The `assertpy` context object
        (It is passed automatically)
    :param period: the expected period.
    :param preperiod: the expected preperiod, if it matters.

    :return: The `assertpy` context object.

    :raises ValueError: if the value is not a period report.
    """
    report = assertpy_context.val
    if not all(
        hasattr(report, name) for name in ("found", "period", "preperiod")
    ):
        raise ValueError("has_period needs a PeriodReport")
    if not report.found:
        assertpy_context.error(
            f"Expected period {period}, but no period was certified "
            f"within {report.search_bound} positions"
        )
    elif report.period != period or (
        preperiod is not None and report.preperiod != preperiod
    ):
        assertpy_context.error(
            f"Expected period {period}"
            + (f" after {preperiod}" if preperiod is not None else "")
            + f", but found period {report.period} "
            f"after {report.preperiod}"
        )
    return assertpy_context
