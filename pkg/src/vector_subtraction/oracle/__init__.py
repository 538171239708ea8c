"""Ground-truth outcomes by dynamic programming, and grid verifiers.

The oracle computes P/N outcomes exactly on finite boxes:

* :py:func:`compute_grid` for planar rulesets, bit-packed;
* :py:func:`compute_sequence` for one-dimensional rulesets;
* :py:func:`compute_dd` for small boxes in up to six dimensions.

Grids are then checked against the known structural lemmas with
:py:func:`verify_ptop`, :py:func:`verify_three_move_lemmas`,
:py:func:`verify_additive_converse` and :py:func:`verify_exchange`, all
returning a :py:class:`VerificationReport`.

.. code-block:: python

    from assertpy import assert_that
    from vector_subtraction.model import parse_ruleset
    from vector_subtraction.oracle import compute_grid, verify_ptop

    ruleset = parse_ruleset("2,1;1,3")
    grid = compute_grid(ruleset, 50, 50)
    assert_that(verify_ptop(grid)).is_verified()

    # a corrupted grid is caught at the translated pair of cells
    broken = grid.with_flipped(20, 20)
    assert_that(verify_ptop(broken)).has_counterexample_at((17, 16))

Importing this package registers the custom `assertpy` assertions of
:py:mod:`vector_subtraction.oracle.assertions`.
"""

from assertpy import add_extension

from .assertions import (
    has_counterexample_at,
    has_outcome_at,
    has_period,
    is_verified,
    matches_cells,
)
from .compute import (
    compute_dd,
    compute_grid,
    compute_sequence,
    grid_bytes,
    outcome_of,
    winning_moves,
)
from .grid import OutcomeGrid, OutcomeSequence, read_raw, write_raw
from .verify import (
    VerificationReport,
    verify_additive_converse,
    verify_exchange,
    verify_ptop,
    verify_three_move_lemmas,
)

# register the custom assertions
add_extension(is_verified)
add_extension(has_counterexample_at)
add_extension(has_outcome_at)
add_extension(matches_cells)
add_extension(has_period)

__all__ = [
    "OutcomeGrid",
    "OutcomeSequence",
    "VerificationReport",
    "compute_dd",
    "compute_grid",
    "compute_sequence",
    "grid_bytes",
    "outcome_of",
    "read_raw",
    "verify_additive_converse",
    "verify_exchange",
    "verify_ptop",
    "verify_three_move_lemmas",
    "winning_moves",
    "write_raw",
]
