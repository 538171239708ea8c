"""Reference outcomes and figure fixtures for the unit tests."""

from .reference import (
    reference_p_cells,
    reference_p_positions,
    reference_sequence,
)

__all__ = [
    "reference_p_cells",
    "reference_p_positions",
    "reference_sequence",
]
