"""The ``vector-subtraction`` command line.

.. code-block:: console

    $ vector-subtraction grid -s "2,1;1,3" -b 10x10 -o crow.pbm
    $ vector-subtraction solve -s "13,1;2,16" -p 1000000000000,999999999999
    $ vector-subtraction verify -s @sym-additive -b 100x100
    $ vector-subtraction scheme --builtin symadd:1,2 -b 26x26
    $ vector-subtraction segments -s @asym-additive -b 200x200 \\
        --line 4/5-4/5 --line 9/8+2
    $ vector-subtraction bench -s "2,1;1,3" --queries 10000

Exit status is 0 on success, 1 when a verification fails and 2 on a
usage or input error. Diagnostics go to standard error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .analysis import estimate_boundaries, verify_segmentation
from .automaton import (
    ColoringScheme,
    format_schemes,
    parse_schemes,
    resolve_builtin,
    run_schemes,
    verify_segments,
)
from .bench import DEFAULT_MAGNITUDES, run_bench
from .config import SolverConfig
from .errors import RulesetError, RulesetShapeError, VectorSubtractionError
from .model import Ruleset, as_position, resolve_ruleset
from .oracle import (
    OutcomeGrid,
    VerificationReport,
    compute_grid,
    compute_sequence,
    outcome_of,
    verify_exchange,
    verify_ptop,
    verify_three_move_lemmas,
    write_raw,
)
from .periodicity import (
    LineSpec,
    PeriodReport,
    column_periods,
    find_eventual_period,
    line_period,
    row_periods,
)
from .render import (
    render_csv,
    render_json,
    render_pbm,
    render_ppm,
    render_table_csv,
)

logger = logging.getLogger("vector_subtraction.cli")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _ruleset(text: str) -> Ruleset:
    try:
        return resolve_ruleset(text)
    except RulesetError as error:
        raise argparse.ArgumentTypeError(str(error)) from error


def _board(text: str) -> tuple[int, int]:
    width, sep, height = text.lower().partition("x")
    try:
        size = (int(width), int(height)) if sep else None
    except ValueError:
        size = None
    if size is None or min(size) < 1:
        raise argparse.ArgumentTypeError(
            f"expected a board WxH with positive sides, got {text!r}"
        )
    return size


def _position(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.replace(";", ",").split(","))
    except ValueError as error:
        raise argparse.ArgumentTypeError(
            f"expected comma separated coordinates, got {text!r}"
        ) from error


def _line(text: str) -> LineSpec:
    try:
        return LineSpec.parse(text)
    except VectorSubtractionError as error:
        raise argparse.ArgumentTypeError(str(error)) from error


def _integers(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as error:
        raise argparse.ArgumentTypeError(
            f"expected comma separated integers, got {text!r}"
        ) from error


def build_arg_parser() -> argparse.ArgumentParser:
    """Build the parser of every subcommand.

    :return: the parser.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log INFO with -v, DEBUG with -vv",
    )
    common.add_argument(
        "--budget",
        type=int,
        metavar="MIB",
        help="memory budget of grid computations in MiB",
    )
    common.add_argument("-o", "--output", metavar="FILE", help="output file")
    common.add_argument("--json", metavar="FILE", help="JSON report file")

    parser = argparse.ArgumentParser(
        prog="vector-subtraction",
        description="Outcomes of finite vector subtraction games",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        return commands.add_parser(name, parents=[common], help=help_text)

    grid = command("grid", "compute an outcome grid")
    grid.add_argument("-s", "--ruleset", type=_ruleset, required=True)
    grid.add_argument("-b", "--board", type=_board, required=True)
    grid.add_argument(
        "--format",
        choices=("pbm", "ppm", "csv", "raw"),
        help="output format, by default from the file extension or pbm",
    )

    solve = command("solve", "decide positions")
    solve.add_argument("-s", "--ruleset", type=_ruleset, required=True)
    solve.add_argument(
        "-p",
        "--position",
        type=_position,
        action="append",
        required=True,
        help="coordinates x,y,...; repeatable",
    )

    periods = command("periods", "find eventual periods")
    periods.add_argument("-s", "--ruleset", type=_ruleset, required=True)
    periods.add_argument("-b", "--board", type=_board)
    periods.add_argument(
        "--length", type=int, help="sequence length of 1-d rulesets"
    )
    periods.add_argument("--rows", type=int, help="the first N rows")
    periods.add_argument("--columns", type=int, help="the first N columns")
    periods.add_argument("--line", type=_line, action="append", default=[])

    scheme = command("scheme", "run and verify coloring schemes")
    source = scheme.add_mutually_exclusive_group(required=True)
    source.add_argument("--builtin", metavar="NAME[:PARAMS]")
    source.add_argument("--file", type=Path, help="scheme file")
    scheme.add_argument(
        "-s", "--ruleset", type=_ruleset, help="ruleset of a scheme file"
    )
    scheme.add_argument("-b", "--board", type=_board, required=True)
    scheme.add_argument(
        "--show", action="store_true", help="print the schemes as text"
    )

    segments = command("segments", "estimate and certify segmentations")
    segments.add_argument("-s", "--ruleset", type=_ruleset, required=True)
    segments.add_argument("-b", "--board", type=_board, required=True)
    segments.add_argument(
        "--line",
        type=_line,
        action="append",
        default=[],
        help="boundary p/q+m; estimated when absent",
    )
    segments.add_argument("--max-pq", type=int)
    segments.add_argument("--threshold", type=float)
    segments.add_argument(
        "--top", type=int, default=2, help="estimated lines to certify"
    )
    segments.add_argument(
        "--connectivity",
        type=int,
        choices=(4, 8),
        action="append",
        help="neighbourhood for N-percolation; repeatable, default both",
    )

    verify = command("verify", "check the structural lemmas on a grid")
    verify.add_argument("-s", "--ruleset", type=_ruleset, required=True)
    verify.add_argument("-b", "--board", type=_board, required=True)

    bench = command("bench", "time the closed form against the oracle")
    bench.add_argument("-s", "--ruleset", type=_ruleset, required=True)
    bench.add_argument("--queries", type=int, default=1000)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument(
        "--magnitudes",
        type=_integers,
        default=list(DEFAULT_MAGNITUDES),
        help="comma separated exponents of the coordinate magnitudes",
    )
    return parser


def _emit(data: str | bytes, path: str | None) -> None:
    if path is None or path == "-":
        if isinstance(data, bytes):
            sys.stdout.buffer.write(data)
            sys.stdout.buffer.flush()
        else:
            sys.stdout.write(data)
        return
    if isinstance(data, bytes):
        Path(path).write_bytes(data)
    else:
        Path(path).write_text(data, encoding="utf-8")
    logger.info("Wrote %s", path)


def _emit_json(args: argparse.Namespace, kind: str, body: Any) -> None:
    if args.json:
        _emit(render_json(kind, body), args.json)


def _planar_grid(
    args: argparse.Namespace, config: SolverConfig
) -> OutcomeGrid:
    if args.ruleset.dimension != 2:
        raise RulesetShapeError(
            f"{args.command} needs a planar ruleset, got dimension "
            f"{args.ruleset.dimension}"
        )
    width, height = args.board
    return compute_grid(args.ruleset, width, height, config=config)


def _run_grid(args: argparse.Namespace, config: SolverConfig) -> int:
    grid = _planar_grid(args, config)
    chosen = args.format
    if chosen is None and args.output:
        chosen = Path(args.output).suffix.lstrip(".").lower()
    if chosen not in ("pbm", "ppm", "csv", "raw"):
        chosen = "pbm"
    data: str | bytes = {
        "pbm": render_pbm,
        "ppm": render_ppm,
        "csv": render_csv,
        "raw": write_raw,
    }[chosen](grid)
    _emit(data, args.output)
    _emit_json(
        args,
        "grid",
        {
            "ruleset": str(args.ruleset),
            "width": grid.width,
            "height": grid.height,
            "p_positions": grid.count_p(),
        },
    )
    return EXIT_OK


def _run_solve(args: argparse.Namespace, config: SolverConfig) -> int:
    answers = []
    for position in args.position:
        point = as_position(position, args.ruleset.dimension)
        outcome = outcome_of(args.ruleset, point, config=config)
        answers.append({"position": list(point), "outcome": str(outcome)})
        print(outcome)
    _emit_json(
        args, "solve", {"ruleset": str(args.ruleset), "answers": answers}
    )
    return EXIT_OK


def _run_periods(args: argparse.Namespace, config: SolverConfig) -> int:
    reports: list[PeriodReport] = []
    if args.ruleset.dimension == 1:
        length = args.length or 10 * args.ruleset.max_component * 3
        reports.append(
            find_eventual_period(compute_sequence(args.ruleset, length))
        )
    else:
        if args.board is None:
            raise RulesetShapeError("planar rulesets need a board -b WxH")
        grid = _planar_grid(args, config)
        if args.rows is not None or args.columns is None:
            rows = range(min(args.rows or grid.height, grid.height))
            reports.extend(row_periods(grid, rows))
        if args.columns is not None:
            columns = range(min(args.columns, grid.width))
            reports.extend(column_periods(grid, columns))
        reports.extend(line_period(grid, line) for line in args.line)
    rows_data = [report.to_dict() for report in reports]
    _emit(render_table_csv(rows_data), args.output)
    _emit_json(
        args, "periods", {"ruleset": str(args.ruleset), "reports": rows_data}
    )
    return EXIT_OK if all(r.found for r in reports) else EXIT_FAILED


def _load_schemes(
    args: argparse.Namespace,
) -> tuple[Ruleset, list[ColoringScheme]]:
    if args.builtin:
        builtin = resolve_builtin(args.builtin)
        return args.ruleset or builtin.ruleset, list(builtin.schemes)
    if args.ruleset is None:
        raise RulesetShapeError("a scheme file needs its ruleset -s")
    text = args.file.read_text(encoding="utf-8")
    return args.ruleset, parse_schemes(text, str(args.file))


def _run_scheme(args: argparse.Namespace, config: SolverConfig) -> int:
    ruleset, schemes = _load_schemes(args)
    if args.show:
        sys.stdout.write(format_schemes(schemes))
    width, height = args.board
    grid = compute_grid(ruleset, width, height, config=config)
    report = verify_segments(schemes, grid, config=config)
    _print_report(report)
    if args.output:
        coloring = run_schemes(schemes, width, height, config=config)
        _emit(render_ppm(grid, coloring), args.output)
    _emit_json(args, "scheme", report.to_dict())
    return EXIT_OK if report.passed else EXIT_FAILED


def _run_segments(args: argparse.Namespace, config: SolverConfig) -> int:
    grid = _planar_grid(args, config)
    lines = list(args.line)
    candidates = []
    if not lines:
        candidates = estimate_boundaries(
            grid, args.max_pq, threshold=args.threshold, config=config
        )
        for candidate in candidates:
            print(
                f"candidate {candidate.line} score {candidate.score:.4f}"
            )
        lines = [c.line for c in candidates[: args.top]]
    report = verify_segmentation(
        grid,
        lines,
        connectivities=args.connectivity or (4, 8),
        config=config,
    )
    for wedge in report.wedges:
        verdicts = " ".join(
            f"percolates{k}={v.percolates}"
            for k, v in sorted(wedge.percolation.items())
        )
        print(
            f"wedge {wedge.index} ({wedge.segment}) cells {wedge.cells} "
            f"certified {wedge.certified} {verdicts}".rstrip()
        )
    print(
        f"k={report.k} coverage={report.coverage:.4f} "
        f"passed={report.passed}"
    )
    if args.output:
        _emit(render_ppm(grid, lines=lines), args.output)
    body = report.to_dict()
    body["candidates"] = [c.to_dict() for c in candidates]
    _emit_json(args, "segments", body)
    return EXIT_OK if report.passed else EXIT_FAILED


def _print_report(report: VerificationReport) -> None:
    for item in report.items or (report,):
        status = "ok" if item.passed else "FAILED"
        print(
            f"{item.claim}: {status} ({item.cells_checked} cells, "
            f"{item.total_counterexamples} counterexamples)"
        )
        for position in item.counterexamples[:5]:
            print(f"  at {position}")


def _run_verify(args: argparse.Namespace, config: SolverConfig) -> int:
    grid = _planar_grid(args, config)
    ruleset = args.ruleset
    reports = [verify_exchange(grid, ruleset, config=config)]
    if len(ruleset) == 2:
        reports.append(verify_ptop(grid, ruleset, config=config))
    if len(ruleset) == 3:
        try:
            reports.append(
                verify_three_move_lemmas(grid, ruleset, config=config)
            )
        except RulesetShapeError as error:
            logger.info("Skipping the three-move lemmas: %s", error)
    report = VerificationReport.aggregate("verify", reports, config)
    for part in reports:
        _print_report(part)
    _emit_json(args, "verify", report.to_dict())
    return EXIT_OK if report.passed else EXIT_FAILED


def _run_bench(args: argparse.Namespace, config: SolverConfig) -> int:
    rows = run_bench(
        args.ruleset,
        args.magnitudes,
        args.queries,
        args.seed,
        config=config,
    )
    data = [row.to_dict() for row in rows]
    _emit(render_table_csv(data), args.output)
    _emit_json(args, "bench", {"ruleset": str(args.ruleset), "rows": data})
    return EXIT_OK


_COMMANDS = {
    "grid": _run_grid,
    "solve": _run_solve,
    "periods": _run_periods,
    "scheme": _run_scheme,
    "segments": _run_segments,
    "verify": _run_verify,
    "bench": _run_bench,
}


def run_cli(argv: Sequence[str] | None = None) -> int:
    """Run one command.

    :param argv: the arguments after the program name.

    :return: the exit status.
    """
    parser = build_arg_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return EXIT_OK if error.code == 0 else EXIT_USAGE
    level = (logging.WARNING, logging.INFO, logging.DEBUG)[
        min(args.verbose, 2)
    ]
    logging.basicConfig(
        level=level,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    logging.getLogger("vector_subtraction").setLevel(level)
    try:
        config = SolverConfig.from_env()
        if args.budget is not None:
            config = config.with_budget_mib(args.budget)
        return _COMMANDS[args.command](args, config)
    except (VectorSubtractionError, ValueError, OSError) as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    """Run the command line and exit with its status."""
    sys.exit(run_cli())
