"""Fixtures for the oracle unit tests."""

import pytest

from vector_subtraction.model import Ruleset, parse_ruleset
from vector_subtraction.oracle import OutcomeGrid, compute_grid


@pytest.fixture
def crow_squirrel() -> Ruleset:
    """Return the two-move ruleset ``{(2,1),(1,3)}``.

    :return: the ruleset.
    """
    return parse_ruleset("2,1;1,3")


@pytest.fixture
def crow_grid(crow_squirrel: Ruleset) -> OutcomeGrid:
    """Compute a 50 by 50 grid of ``{(2,1),(1,3)}``.

    :param crow_squirrel: the ruleset.

    :return: the grid.
    """
    return compute_grid(crow_squirrel, 50, 50)
