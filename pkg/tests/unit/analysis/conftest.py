"""Fixtures for the analysis unit tests."""

import pytest

from vector_subtraction.model import resolve_ruleset
from vector_subtraction.oracle import OutcomeGrid, compute_grid


@pytest.fixture(scope="module")
def asym_grid() -> OutcomeGrid:
    """Compute a 200 by 200 grid of ``{(1,2),(2,3),(3,1)}``.

    :return: the grid.
    """
    return compute_grid(resolve_ruleset("@asym-additive"), 200, 200)
