"""Ready-made schemes for rulesets whose segmentation is known.

``asym-os``
    The three segments of ``{(1,2),(2,3),(3,1)}``, split by the lines
    ``y = 4x/5 - 4/5`` and ``y = 9x/8 + 2``.
``symadd:a,b``
    ``{(a,b),(b,a),(a+b,a+b)}`` for ``b/2 <= a < b``: the square
    ``x, y < b`` translated by ``(2a+b, 2b+a)`` and ``(2b+a, 2a+b)``,
    plus rays along both axes.
``arith-add:a``
    ``{(a,2a),(3a,4a),(4a,6a)}``, five colors split by lines of slope
    4/3 and 12/7.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from ..errors import SchemeFormatError, UnsupportedRegimeError
from ..model import Ruleset
from .scheme import Color, ColoringScheme, SegmentSpec, Seed, UpdateRule


@dataclass(frozen=True)
class BuiltinScheme:
    """A named set of schemes covering the board for one ruleset.

    :param name: the catalogue name with its parameters.
    :param ruleset: the ruleset whose P-positions the schemes paint.
    :param schemes: schemes on pairwise disjoint segments.
    :param middle: the middle wedge, used for percolation checks.
    """

    name: str
    ruleset: Ruleset
    schemes: tuple[ColoringScheme, ...]
    middle: SegmentSpec


def _colors(*names: str) -> tuple[Color, ...]:
    return tuple(Color(i, name) for i, name in enumerate(names))


def _rule(sources: str, dx: int, dy: int, target: str) -> UpdateRule:
    return UpdateRule(frozenset(sources.split(",")), (dx, dy), target)


def _points(color: str, *cells: tuple[int, int]) -> tuple[Seed, ...]:
    return tuple(Seed(color, cell) for cell in cells)


def asym_os() -> BuiltinScheme:
    """Build the segmentation of ``{(1,2),(2,3),(3,1)}``.

    :return: the lower, middle and upper schemes.
    """
    lower = ColoringScheme(
        "asym-os-lower",
        _colors("gray"),
        (Seed("gray", (2, 0), (1, 0)),),
        (_rule("gray", 5, 4, "gray"),),
        SegmentSpec(upper=(Fraction(4, 5), Fraction(-4, 5))),
    )
    middle = ColoringScheme(
        "asym-os-middle",
        _colors("red", "green", "blue"),
        _points("red", (0, 0), (0, 1), (0, 2))
        + _points("green", (1, 0), (1, 1))
        + _points("blue", (2, 1)),
        (
            _rule("red", 5, 4, "green"),
            _rule("green", 3, 5, "red"),
            _rule("green,blue", 5, 4, "blue"),
        ),
        SegmentSpec(
            (Fraction(4, 5), Fraction(-1)), (Fraction(9, 8), Fraction(17, 8))
        ),
    )
    upper = ColoringScheme(
        "asym-os-upper",
        _colors("orange", "yellow"),
        (Seed("orange", (0, 3), (0, 1)),),
        (_rule("orange", 4, 4, "yellow"), _rule("yellow", 4, 5, "orange")),
        SegmentSpec(lower=(Fraction(9, 8), Fraction(2))),
    )
    return BuiltinScheme(
        "asym-os",
        Ruleset([(1, 2), (2, 3), (3, 1)]),
        (lower, middle, upper),
        middle.segment,
    )


def symadd(a: int, b: int) -> BuiltinScheme:
    """Build the scheme of the symmetric additive ruleset.

    The square ``x, y < b`` and its translates are blue; the rays above
    it are gray and the rays to its right silver. A cell reached by
    several colors keeps blue over gray over silver.

    :param a: the smaller component.
    :param b: the larger component.

    :return: the single whole-quadrant scheme.

    :raises UnsupportedRegimeError: unless ``b/2 <= a < b``.
    """
    if not 0 < a < b <= 2 * a:
        raise UnsupportedRegimeError(
            f"symadd needs b/2 <= a < b, got a={a}, b={b}; beyond it the "
            "P-positions lose this structure"
        )
    up = (2 * a + b, 2 * b + a)
    across = (2 * b + a, 2 * a + b)
    seeds = (
        tuple(Seed("blue", (i, j)) for i in range(b) for j in range(b))
        + tuple(Seed("gray", (i, b), (0, 1)) for i in range(a))
        + tuple(Seed("silver", (b, j), (1, 0)) for j in range(a))
    )
    scheme = ColoringScheme(
        f"symadd-{a}-{b}",
        _colors("blue", "gray", "silver"),
        seeds,
        (
            _rule("blue", *up, "blue"),
            _rule("blue", *across, "blue"),
            _rule("gray", *up, "gray"),
            _rule("silver", *across, "silver"),
        ),
        priority=("blue", "gray", "silver"),
    )
    slope = Fraction(up[0], up[1])
    middle = SegmentSpec(
        (slope, -slope * (b - 1)), (1 / slope, Fraction(b - 1))
    )
    return BuiltinScheme(
        f"symadd:{a},{b}",
        Ruleset([(a, b), (b, a), (a + b, a + b)]),
        (scheme,),
        middle,
    )


def arith_add(a: int = 1) -> BuiltinScheme:
    """Build the five-color segmentation of ``{(a,2a),(3a,4a),(4a,6a)}``.

    :param a: the scale; every cell of the unit scheme becomes an
        ``a`` by ``a`` block.

    :return: the lower, middle and upper schemes.

    :raises UnsupportedRegimeError: if ``a`` is not positive.
    """
    if a < 1:
        raise UnsupportedRegimeError(f"arith-add needs a >= 1, got {a}")
    lower = ColoringScheme(
        "arith-add-lower",
        _colors("blue"),
        (Seed("blue", (1, 0), (1, 0)), Seed("blue", (1, 1), (1, 0))),
        (_rule("blue", 6, 8, "blue"),),
        SegmentSpec(upper=(Fraction(4, 3), Fraction(0))),
    )
    middle = ColoringScheme(
        "arith-add-middle",
        _colors("purple", "green", "blue"),
        _points("purple", (0, 0), (0, 1)),
        (
            _rule("purple", 2, 4, "green"),
            _rule("purple", 6, 8, "blue"),
            _rule("green", 5, 8, "purple"),
            _rule("green", 6, 8, "blue"),
            _rule("blue", 6, 8, "blue"),
        ),
        SegmentSpec(
            (Fraction(4, 3), Fraction(-1, 3)),
            (Fraction(12, 7), Fraction(12, 7)),
        ),
    )
    upper = ColoringScheme(
        "arith-add-upper",
        _colors("red", "yellow"),
        (Seed("red", (0, 2), (0, 1)),),
        (_rule("red", 2, 4, "yellow"), _rule("yellow", 5, 8, "red")),
        SegmentSpec(lower=(Fraction(12, 7), Fraction(11, 7))),
    )
    schemes = tuple(s.scaled(a) for s in (lower, middle, upper))
    return BuiltinScheme(
        f"arith-add:{a}",
        Ruleset([(a, 2 * a), (3 * a, 4 * a), (4 * a, 6 * a)]),
        schemes,
        schemes[1].segment,
    )


def builtin_schemes() -> dict[str, Callable[..., BuiltinScheme]]:
    """List the builtin scheme constructors.

    :return: the constructors by name; parameters are positional
        integers.
    """
    return {"asym-os": asym_os, "symadd": symadd, "arith-add": arith_add}


def resolve_builtin(text: str) -> BuiltinScheme:
    """Build a scheme from ``"name"`` or ``"name:p1,p2"``.

    :param text: the name with optional parameters.

    :return: the builtin.

    :raises SchemeFormatError: for an unknown name or bad parameters.
    """
    name, _, params = text.partition(":")
    catalogue = builtin_schemes()
    if name not in catalogue:
        raise SchemeFormatError(
            f"unknown builtin scheme {name!r}; choose from "
            f"{', '.join(sorted(catalogue))}",
            "--builtin",
        )
    try:
        values = [int(p) for p in params.split(",") if p.strip()]
        return catalogue[name](*values)
    except (ValueError, TypeError) as error:
        raise SchemeFormatError(
            f"bad parameters {params!r} for {name}: {error}", "--builtin"
        ) from error
