"""Latency of the two-move closed form against the dynamic program.

The closed form works on the binary size of the coordinates, while the
dynamic program must fill the whole board below a position. Each
magnitude ``2^bits`` gets one closed-form row (per-query latencies over
uniformly random positions) and one oracle row (the time to fill the
``2^bits`` board, or ``infeasible`` when the board exceeds the memory
budget).
"""

import logging
import statistics
import time
from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

from .closed_form import solve_two_move_dd, solve_two_move_dd_many
from .config import DEFAULT_CONFIG, SolverConfig
from .errors import BudgetExceededError, RulesetShapeError
from .model import Position, Ruleset
from .oracle.compute import compute_dd, compute_grid, compute_sequence

logger = logging.getLogger("vector_subtraction.bench")

DEFAULT_MAGNITUDES = (8, 16, 32, 60)


@dataclass(frozen=True)
class BenchRow:
    """One line of the timing table.

    :param solver: ``"closed-form"`` or ``"oracle"``.
    :param bits: the coordinate magnitude is ``2^bits``.
    :param queries: the number of timed runs.
    :param median_us: the median latency in microseconds.
    :param p99_us: the 99th percentile latency in microseconds.
    :param total_s: the total timed duration in seconds.
    :param status: ``"ok"``, or ``"infeasible"`` when over budget.
    :param batch_s: the time to answer all queries in one vectorised
        call, closed form only.
    """

    solver: str
    bits: int
    queries: int
    median_us: float | None
    p99_us: float | None
    total_s: float | None
    status: str = "ok"
    batch_s: float | None = None

    def to_dict(self) -> dict[str, Any]:
        """Convert to a CSV row.

        :return: the row as a dictionary.
        """
        return {
            "solver": self.solver,
            "bits": self.bits,
            "queries": self.queries,
            "median_us": self.median_us,
            "p99_us": self.p99_us,
            "total_s": self.total_s,
            "batch_s": self.batch_s,
            "status": self.status,
        }


def random_positions(
    dimension: int, bits: int, count: int, seed: int = 0
) -> list[Position]:
    """Draw positions with coordinates uniform in ``[0, 2^bits)``.

    :param dimension: the number of coordinates.
    :param bits: the magnitude, at most 63.
    :param count: the number of positions.
    :param seed: the generator seed.

    :return: the positions.
    """
    generator = np.random.default_rng(seed)
    draws = generator.integers(
        0, 2**bits, size=(count, dimension), dtype=np.uint64
    )
    return [tuple(int(v) for v in row) for row in draws]


def _percentile(latencies: list[float], fraction: float) -> float:
    if len(latencies) == 1:
        return latencies[0]
    cuts = statistics.quantiles(latencies, n=100, method="inclusive")
    return cuts[round(fraction * 100) - 1]


def _time_closed_form(
    ruleset: Ruleset, positions: Sequence[Position], bits: int
) -> BenchRow:
    latencies = []
    for position in positions:
        start = time.perf_counter()
        solve_two_move_dd(ruleset, position)
        latencies.append(time.perf_counter() - start)
    points = np.array(positions, dtype=np.uint64)
    start = time.perf_counter()
    solve_two_move_dd_many(ruleset, points)
    batch = time.perf_counter() - start
    return BenchRow(
        "closed-form",
        bits,
        len(latencies),
        statistics.median(latencies) * 1e6,
        _percentile(latencies, 0.99) * 1e6,
        sum(latencies),
        batch_s=batch,
    )


def _time_oracle(
    ruleset: Ruleset, bits: int, config: SolverConfig
) -> BenchRow:
    side = 2**bits
    start = time.perf_counter()
    try:
        cells = side**ruleset.dimension
        if cells > config.memory_budget_bytes:
            raise BudgetExceededError(
                cells, config.memory_budget_bytes, f"a 2^{bits} board"
            )
        if ruleset.dimension == 1:
            compute_sequence(ruleset, side)
        elif ruleset.dimension == 2:
            compute_grid(ruleset, side, side, config=config)
        else:
            compute_dd(ruleset, [side] * ruleset.dimension, config=config)
    except BudgetExceededError as error:
        logger.info("Oracle at 2^%d: %s", bits, error)
        return BenchRow("oracle", bits, 0, None, None, None, "infeasible")
    elapsed = time.perf_counter() - start
    return BenchRow(
        "oracle", bits, 1, elapsed * 1e6, elapsed * 1e6, elapsed
    )


def run_bench(
    ruleset: Ruleset,
    magnitudes: Sequence[int] = DEFAULT_MAGNITUDES,
    queries: int = 1000,
    seed: int = 0,
    *,
    config: SolverConfig = DEFAULT_CONFIG,
) -> list[BenchRow]:
    """Time the closed form and the oracle at each magnitude.

    Position generation and warmup queries are not timed.

    :param ruleset: a two-move ruleset.
    :param magnitudes: the exponents ``bits`` of the magnitudes.
    :param queries: the timed closed-form queries per magnitude.
    :param seed: the seed of the random positions.
    :param config: the warmup size and the oracle's memory budget.

    :return: two rows per magnitude, closed form first.

    :raises RulesetShapeError: if the ruleset does not have two moves.
    :raises ValueError: if a magnitude is outside ``1..63`` or
        ``queries`` is not positive.
    """
    if len(ruleset) != 2:
        raise RulesetShapeError(
            f"the benchmark needs a two-move ruleset, got {len(ruleset)}"
        )
    if queries < 1:
        raise ValueError(f"queries must be positive, got {queries}")
    rows = []
    for bits in magnitudes:
        if not 1 <= bits <= 63:
            raise ValueError(f"magnitudes are 2^1 to 2^63, got 2^{bits}")
        warmup = random_positions(
            ruleset.dimension, bits, config.bench_warmup, seed + 1
        )
        for position in warmup:
            solve_two_move_dd(ruleset, position)
        positions = random_positions(ruleset.dimension, bits, queries, seed)
        rows.append(_time_closed_form(ruleset, positions, bits))
        rows.append(_time_oracle(ruleset, bits, config))
        logger.info(
            "2^%d: closed form median %.2f us, oracle %s",
            bits,
            rows[-2].median_us,
            rows[-1].status,
        )
    return rows
