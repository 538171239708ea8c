"""Coloring schemes and their fixpoint on a bounded board.

A scheme seeds colored positions, then repeatedly applies update rules:
a cell of a rule's source color paints the cell at the rule's offset
with the rule's target color. Cells outside the scheme's segment or the
board are never painted. Every offset strictly increases ``x + y``, so
the cells are processed diagonal by diagonal and each cell's color is
final by the time its rules fire.
"""

import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterator

import numpy as np

from ..config import DEFAULT_CONFIG, SolverConfig
from ..errors import (
    BudgetExceededError,
    ColorConflictError,
    DegenerateSegmentError,
    SchemeFormatError,
)

logger = logging.getLogger("vector_subtraction.automaton")

Point = tuple[int, int]
Bound = tuple[Fraction, Fraction]

UNCOLORED = -1


@dataclass(frozen=True)
class Color:
    """A color of a scheme.

    :param identifier: a small integer unique within the scheme.
    :param name: the display name.
    """

    identifier: int
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class UpdateRule:
    """Paint ``position + offset`` with ``to_color`` from a source color."""

    from_colors: frozenset[str]
    offset: Point
    to_color: str

    def __post_init__(self) -> None:
        dx, dy = self.offset
        if dx < 0 or dy < 0 or dx + dy == 0:
            raise SchemeFormatError(
                f"rule offsets must be nonnegative and nonzero, "
                f"got {self.offset}"
            )

    def __str__(self) -> str:
        sources = ",".join(sorted(self.from_colors))
        return f"{sources} +{self.offset[0]},{self.offset[1]} -> " + (
            self.to_color
        )


@dataclass(frozen=True)
class Seed:
    """An initially colored point, or an axis-parallel ray from it.

    :param color: the color name.
    :param origin: the first cell.
    :param direction: ``(0, 0)`` for a single point, otherwise ``(1, 0)``
        or ``(0, 1)``.
    """

    color: str
    origin: Point
    direction: Point = (0, 0)

    def __post_init__(self) -> None:
        if self.direction not in ((0, 0), (1, 0), (0, 1)):
            raise SchemeFormatError(
                f"rays must be axis-parallel, got direction {self.direction}"
            )
        if min(self.origin) < 0:
            raise SchemeFormatError(
                f"seed {self.origin} lies outside the quadrant"
            )

    def cells(self, width: int, height: int) -> Iterator[Point]:
        """Enumerate the seeded cells inside a board.

        :param width: the number of columns.
        :param height: the number of rows.

        :yield: the cells; rays stop silently at the board edge.
        """
        x, y = self.origin
        dx, dy = self.direction
        while x < width and y < height:
            yield x, y
            if dx == dy == 0:
                return
            x, y = x + dx, y + dy

    def __str__(self) -> str:
        x, y = self.origin
        if self.direction == (0, 0):
            return f"{self.color} pt {x},{y}"
        dx, dy = self.direction
        return f"{self.color} ray {x},{y} {dx},{dy}"


def _strictly_above(
    xs: np.ndarray, ys: np.ndarray, bound: Bound
) -> np.ndarray:
    slope, offset = bound
    scale = slope.denominator * offset.denominator
    return ys * scale > (
        slope.numerator * offset.denominator * xs
        + offset.numerator * slope.denominator
    )


@dataclass(frozen=True)
class SegmentSpec:
    """The wedge ``alpha x + k < y < beta x + m``.

    Either bound may be absent. With ``scale > 1`` membership is decided
    on ``(x // scale, y // scale)``.
    """

    lower: Bound | None = None
    upper: Bound | None = None
    scale: int = 1

    def __post_init__(self) -> None:
        if self.scale < 1:
            raise SchemeFormatError(f"bad segment scale {self.scale}")
        for name in ("lower", "upper"):
            bound = getattr(self, name)
            if bound is not None:
                object.__setattr__(
                    self, name, (Fraction(bound[0]), Fraction(bound[1]))
                )
        if (
            self.lower is not None
            and self.upper is not None
            and self.lower[0] > self.upper[0]
        ):
            raise DegenerateSegmentError(
                f"the segment {self} narrows to nothing: the lower slope "
                "exceeds the upper one"
            )

    def mask(self, width: int, height: int) -> np.ndarray:
        """Compute membership for every cell of a board.

        :param width: the number of columns.
        :param height: the number of rows.

        :return: a boolean array indexed ``[y, x]``.
        """
        ys, xs = np.mgrid[0:height, 0:width].astype(np.int64)
        xs, ys = xs // self.scale, ys // self.scale
        inside = np.ones((height, width), dtype=bool)
        if self.lower is not None:
            inside &= _strictly_above(xs, ys, self.lower)
        if self.upper is not None:
            slope, offset = self.upper
            inside &= _strictly_above(-xs, -ys, (slope, -offset))
        return inside

    def contains(self, x: int, y: int) -> bool:
        """Tell whether a cell lies strictly inside the wedge.

        :param x: the abscissa.
        :param y: the ordinate.

        :return: whether the cell is a member.
        """
        x, y = x // self.scale, y // self.scale
        if self.lower is not None and not y > self.lower[0] * x + (
            self.lower[1]
        ):
            return False
        if self.upper is not None and not y < self.upper[0] * x + (
            self.upper[1]
        ):
            return False
        return True

    def scaled(self, factor: int) -> "SegmentSpec":
        """Apply the segment to ``factor``-blocks.

        :param factor: the block size.

        :return: the scaled segment.
        """
        return replace(self, scale=self.scale * factor)

    def __str__(self) -> str:
        def side(bound: Bound | None) -> str:
            return "- -" if bound is None else f"{bound[0]} {bound[1]}"

        return f"{side(self.lower)} {side(self.upper)}"


@dataclass(frozen=True)
class ColoringScheme:
    """Initial colored positions, update rules and a segment.

    :param name: a label used in reports.
    :param colors: the colors, identified by name.
    :param seeds: the initially colored points and rays.
    :param rules: the update rules.
    :param segment: the wedge the scheme paints.
    :param priority: empty for the strict policy, where a cell may only
        receive one color; otherwise color names from highest to lowest
        rank, and the higher ranked color wins a contested cell.
    """

    name: str
    colors: tuple[Color, ...]
    seeds: tuple[Seed, ...]
    rules: tuple[UpdateRule, ...]
    segment: SegmentSpec = field(default_factory=SegmentSpec)
    priority: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        names = [color.name for color in self.colors]
        identifiers = [color.identifier for color in self.colors]
        if len(set(names)) != len(names):
            raise SchemeFormatError(f"duplicate color names in {names}")
        if len(set(identifiers)) != len(identifiers):
            raise SchemeFormatError(
                f"duplicate color identifiers in {identifiers}"
            )
        used = {seed.color for seed in self.seeds} | set(self.priority)
        for rule in self.rules:
            used |= rule.from_colors | {rule.to_color}
        unknown = used - set(names)
        if unknown:
            raise SchemeFormatError(
                f"scheme {self.name!r} uses undeclared colors "
                f"{sorted(unknown)}"
            )

    @property
    def strict(self) -> bool:
        """Whether contested cells are errors.

        :return: ``True`` for the strict policy.
        """
        return not self.priority

    def color(self, name: str) -> Color:
        """Look up a color by name.

        :param name: the color name.

        :return: the color.

        :raises KeyError: if the scheme has no such color.
        """
        for color in self.colors:
            if color.name == name:
                return color
        raise KeyError(name)

    def scaled(self, factor: int) -> "ColoringScheme":
        """Blow every cell up into a ``factor`` by ``factor`` block.

        The result paints the P-positions of the ruleset whose moves are
        all multiplied by ``factor``.

        :param factor: the block size.

        :return: the scaled scheme.
        """
        if factor == 1:
            return self
        seeds = tuple(
            Seed(
                seed.color,
                (seed.origin[0] * factor + i, seed.origin[1] * factor + j),
                seed.direction,
            )
            for seed in self.seeds
            for i in range(factor)
            for j in range(factor)
        )
        rules = tuple(
            UpdateRule(
                rule.from_colors,
                (rule.offset[0] * factor, rule.offset[1] * factor),
                rule.to_color,
            )
            for rule in self.rules
        )
        return replace(
            self,
            seeds=seeds,
            rules=rules,
            segment=self.segment.scaled(factor),
        )


class Coloring:
    """The painted cells of one or more schemes on a board."""

    def __init__(
        self,
        cells: np.ndarray,
        colors: tuple[Color, ...],
        name: str = "",
    ) -> None:
        """Initialise the coloring.

        :param cells: color identifiers indexed ``[y, x]``, with
            ``UNCOLORED`` for unpainted cells.
        :param colors: the palette the identifiers refer to.
        :param name: a label used in reports.
        """
        self._cells = cells
        self._cells.setflags(write=False)
        self._colors = colors
        self.name = name

    @property
    def width(self) -> int:
        """The number of columns.

        :return: the width.
        """
        return int(self._cells.shape[1])

    @property
    def height(self) -> int:
        """The number of rows.

        :return: the height.
        """
        return int(self._cells.shape[0])

    @property
    def colors(self) -> tuple[Color, ...]:
        """The palette.

        :return: the colors.
        """
        return self._colors

    @property
    def identifiers(self) -> np.ndarray:
        """The color identifiers indexed ``[y, x]``.

        :return: a read-only array.
        """
        return self._cells

    def mask(self) -> np.ndarray:
        """Mark the painted cells.

        :return: a boolean array indexed ``[y, x]``.
        """
        return self._cells != UNCOLORED

    def colored_cells(self) -> set[Point]:
        """List the painted cells.

        :return: the cells as ``(x, y)``.
        """
        return {(int(x), int(y)) for y, x in np.argwhere(self.mask())}

    def color_at(self, x: int, y: int) -> Color | None:
        """Read the color of a cell.

        :param x: the abscissa.
        :param y: the ordinate.

        :return: the color, or ``None`` if the cell is unpainted.
        """
        identifier = int(self._cells[y, x])
        for color in self._colors:
            if color.identifier == identifier:
                return color
        return None

    def count(self) -> int:
        """Count the painted cells.

        :return: the count.
        """
        return int(np.count_nonzero(self.mask()))

    def merge(self, other: "Coloring") -> "Coloring":
        """Overlay a coloring of the same board with disjoint cells.

        The other palette is renumbered after this one.

        :param other: the coloring to add.

        :return: the combined coloring.

        :raises ValueError: if the boards differ or the cells overlap.
        """
        if self._cells.shape != other.identifiers.shape:
            raise ValueError("cannot merge colorings of different boards")
        if np.any(self.mask() & other.mask()):
            raise ValueError("cannot merge overlapping colorings")
        shift = 1 + max((c.identifier for c in self._colors), default=-1)
        shift -= min((c.identifier for c in other.colors), default=0)
        cells = self._cells.copy()
        painted = other.mask()
        cells[painted] = other.identifiers[painted] + shift
        colors = self._colors + tuple(
            Color(c.identifier + shift, c.name) for c in other.colors
        )
        name = "+".join(n for n in (self.name, other.name) if n)
        return Coloring(cells, colors, name)

    def __repr__(self) -> str:
        return (
            f"Coloring({self.name!r}, {self.width}x{self.height}, "
            f"{self.count()} painted)"
        )


def _derivation(source: Point | None, rule: UpdateRule | Seed) -> str:
    if source is None:
        return f"seed {rule}"
    return f"rule {rule} from {source}"


def run_scheme(
    scheme: ColoringScheme,
    width: int,
    height: int,
    *,
    config: SolverConfig = DEFAULT_CONFIG,
) -> Coloring:
    """Run a scheme to its fixpoint on a ``width`` by ``height`` board.

    :param scheme: the scheme.
    :param width: the number of columns.
    :param height: the number of rows.
    :param config: the memory budget.

    :return: the coloring.

    :raises ColorConflictError: if a strict scheme forces two colors on
        one cell.
    :raises BudgetExceededError: if the board exceeds the budget.
    """
    needed = 2 * width * height
    if needed > config.memory_budget_bytes:
        raise BudgetExceededError(
            needed,
            config.memory_budget_bytes,
            f"running {scheme.name!r} on {width}x{height}",
        )
    identifiers = {c.name: c.identifier for c in scheme.colors}
    names = {c.identifier: c.name for c in scheme.colors}
    rank = {
        name: len(scheme.priority) - i
        for i, name in enumerate(scheme.priority)
    }
    inside = scheme.segment.mask(width, height)
    cells = np.full((height, width), UNCOLORED, dtype=np.int16)
    origin: dict[Point, str] = {}
    diagonals: list[list[Point]] = [[] for _ in range(width + height)]

    def paint(cell: Point, color: str, how: str) -> None:
        x, y = cell
        if x >= width or y >= height or not inside[y, x]:
            return
        incoming = identifiers[color]
        existing = int(cells[y, x])
        if existing == UNCOLORED:
            cells[y, x] = incoming
            origin[cell] = how
            diagonals[x + y].append(cell)
            return
        if existing == incoming:
            return
        current = names[existing]
        if scheme.strict:
            raise ColorConflictError(cell, current, color, origin[cell], how)
        if rank.get(color, 0) > rank.get(current, 0):
            cells[y, x] = incoming
            origin[cell] = how

    for seed in scheme.seeds:
        for cell in seed.cells(width, height):
            paint(cell, seed.color, _derivation(None, seed))

    by_source: dict[int, list[UpdateRule]] = {
        c.identifier: [r for r in scheme.rules if c.name in r.from_colors]
        for c in scheme.colors
    }
    for diagonal in diagonals:
        for x, y in diagonal:
            for rule in by_source[int(cells[y, x])]:
                dx, dy = rule.offset
                paint(
                    (x + dx, y + dy),
                    rule.to_color,
                    _derivation((x, y), rule),
                )

    coloring = Coloring(cells, scheme.colors, scheme.name)
    logger.debug(
        "Scheme %r painted %d cells on %dx%d",
        scheme.name,
        coloring.count(),
        width,
        height,
    )
    return coloring


def run_schemes(
    schemes: tuple[ColoringScheme, ...] | list[ColoringScheme],
    width: int,
    height: int,
    *,
    config: SolverConfig = DEFAULT_CONFIG,
) -> Coloring:
    """Run several schemes on disjoint segments and overlay the results.

    :param schemes: the schemes.
    :param width: the number of columns.
    :param height: the number of rows.
    :param config: the memory budget.

    :return: the combined coloring.

    :raises ValueError: if no scheme is given or two schemes paint the
        same cell.
    """
    if not schemes:
        raise ValueError("at least one scheme is needed")
    combined = run_scheme(schemes[0], width, height, config=config)
    for scheme in schemes[1:]:
        combined = combined.merge(
            run_scheme(scheme, width, height, config=config)
        )
    return combined
