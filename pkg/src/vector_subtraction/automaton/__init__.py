"""Coloring schemes that paint the P-positions of outcome segments.

A :py:class:`ColoringScheme` seeds a few colored cells, then lets update
rules paint translated cells until nothing changes. When the painted
cells of a segment are exactly its P-positions the scheme describes the
segment completely.

.. code-block:: python

    from assertpy import assert_that
    from vector_subtraction.automaton import resolve_builtin, verify_segments
    from vector_subtraction.oracle import compute_grid

    builtin = resolve_builtin("symadd:1,2")
    grid = compute_grid(builtin.ruleset, 26, 26)
    assert_that(verify_segments(builtin.schemes, grid)).is_verified()

Schemes may also be read from text with :py:func:`parse_schemes`.
"""

from .builtins import (
    BuiltinScheme,
    arith_add,
    asym_os,
    builtin_schemes,
    resolve_builtin,
    symadd,
)
from .scheme import (
    UNCOLORED,
    Color,
    Coloring,
    ColoringScheme,
    SegmentSpec,
    Seed,
    UpdateRule,
    run_scheme,
    run_schemes,
)
from .scheme_file import format_schemes, parse_schemes
from .verify import verify_segment, verify_segments

__all__ = [
    "UNCOLORED",
    "BuiltinScheme",
    "Color",
    "Coloring",
    "ColoringScheme",
    "SegmentSpec",
    "Seed",
    "UpdateRule",
    "arith_add",
    "asym_os",
    "builtin_schemes",
    "format_schemes",
    "parse_schemes",
    "resolve_builtin",
    "run_scheme",
    "run_schemes",
    "symadd",
    "verify_segment",
    "verify_segments",
]
