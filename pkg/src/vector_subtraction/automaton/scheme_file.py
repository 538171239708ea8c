"""A line-oriented text format for coloring schemes.

.. code-block:: text

    # the lower segment of the asymmetric additive ruleset
    scheme lower
    color gray
    init gray ray 2,0 1,0
    rule gray +5,4 -> gray
    segment - - 4/5 -4/5
    policy strict

``segment`` takes the lower slope and offset then the upper slope and
offset, with ``- -`` for a missing side. ``policy priority`` lists color
names from highest to lowest rank. A file may hold several schemes, each
opened by a ``scheme`` line; lines before the first one belong to a
scheme named after the file.
"""

from fractions import Fraction
from typing import Iterable

from ..errors import DegenerateSegmentError, SchemeFormatError
from .scheme import (
    Bound,
    Color,
    ColoringScheme,
    SegmentSpec,
    Seed,
    UpdateRule,
)


class _Draft:  # pylint: disable=too-few-public-methods
    def __init__(self, name: str, line: int) -> None:
        self.name = name
        self.line = line
        self.colors: list[Color] = []
        self.seeds: list[Seed] = []
        self.rules: list[UpdateRule] = []
        self.segment = SegmentSpec()
        self.priority: tuple[str, ...] = ()
        self.empty = True


def _pair(text: str) -> tuple[int, int]:
    pieces = text.split(",")
    if len(pieces) != 2:
        raise ValueError(f"expected x,y but got {text!r}")
    return int(pieces[0]), int(pieces[1])


def _bound(slope: str, offset: str) -> Bound | None:
    if slope == "-" and offset == "-":
        return None
    return Fraction(slope), Fraction(offset)


def _apply(draft: _Draft, words: list[str]) -> None:
    keyword, args = words[0], words[1:]
    draft.empty = False
    if keyword == "color" and len(args) == 1:
        draft.colors.append(Color(len(draft.colors), args[0]))
    elif keyword == "init" and len(args) == 3 and args[1] == "pt":
        draft.seeds.append(Seed(args[0], _pair(args[2])))
    elif keyword == "init" and len(args) == 4 and args[1] == "ray":
        draft.seeds.append(Seed(args[0], _pair(args[2]), _pair(args[3])))
    elif (
        keyword == "rule"
        and len(args) == 4
        and args[1].startswith("+")
        and args[2] == "->"
    ):
        sources = frozenset(name for name in args[0].split(",") if name)
        draft.rules.append(
            UpdateRule(sources, _pair(args[1][1:]), args[3])
        )
    elif keyword == "segment" and len(args) == 4:
        draft.segment = SegmentSpec(
            _bound(args[0], args[1]), _bound(args[2], args[3])
        )
    elif keyword == "policy" and args == ["strict"]:
        draft.priority = ()
    elif keyword == "policy" and len(args) > 1 and args[0] == "priority":
        draft.priority = tuple(args[1:])
    else:
        raise ValueError(f"cannot understand {' '.join(words)!r}")


def _finish(draft: _Draft, source: str) -> ColoringScheme:
    try:
        return ColoringScheme(
            draft.name,
            tuple(draft.colors),
            tuple(draft.seeds),
            tuple(draft.rules),
            draft.segment,
            draft.priority,
        )
    except SchemeFormatError as error:
        raise SchemeFormatError(
            f"in scheme {draft.name!r}: {error.detail}", source, draft.line
        ) from error


def parse_schemes(
    text: str, source: str = "<string>"
) -> list[ColoringScheme]:
    """Parse one or more schemes.

    :param text: the scheme text.
    :param source: the file name used in error messages.

    :return: the schemes in file order.

    :raises SchemeFormatError: on any malformed line or inconsistent
        scheme, naming the file and line.
    """
    drafts = [_Draft(source, 1)]
    for number, raw in enumerate(text.splitlines(), start=1):
        words = raw.split("#", 1)[0].split()
        if not words:
            continue
        if words[0] == "scheme":
            if len(words) != 2:
                raise SchemeFormatError("scheme needs a name", source, number)
            if drafts[-1].empty:
                drafts.pop()
            drafts.append(_Draft(words[1], number))
            drafts[-1].empty = False
            continue
        try:
            _apply(drafts[-1], words)
        except (
            ValueError,
            ZeroDivisionError,
            SchemeFormatError,
            DegenerateSegmentError,
        ) as error:
            detail = getattr(error, "detail", str(error))
            raise SchemeFormatError(detail, source, number) from error
    schemes = [_finish(draft, source) for draft in drafts if not draft.empty]
    if not schemes:
        raise SchemeFormatError("no scheme found", source)
    return schemes


def format_schemes(schemes: Iterable[ColoringScheme]) -> str:
    """Write schemes in the text format.

    Scaled segments are written unscaled; only schemes of scale 1 read
    back identically.

    :param schemes: the schemes.

    :return: the text.
    """
    lines = []
    for scheme in schemes:
        lines.append(f"scheme {scheme.name}")
        lines.extend(f"color {color.name}" for color in scheme.colors)
        lines.extend(f"init {seed}" for seed in scheme.seeds)
        lines.extend(f"rule {rule}" for rule in scheme.rules)
        segment = scheme.segment
        if segment.lower is not None or segment.upper is not None:
            lines.append(f"segment {segment}")
        if scheme.priority:
            lines.append(f"policy priority {' '.join(scheme.priority)}")
        else:
            lines.append("policy strict")
    return "\n".join(lines) + "\n"
