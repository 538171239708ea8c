"""Tunable limits shared by the oracle, the analyses and the command line.

All limits live in one immutable :py:class:`SolverConfig`. Operations
that consume a limit take an optional ``config`` keyword and fall back
to :py:data:`DEFAULT_CONFIG`:

.. code-block:: python

    from vector_subtraction.config import SolverConfig
    from vector_subtraction.oracle import compute_grid

    small = SolverConfig().with_budget_mib(64)
    grid = compute_grid(ruleset, 4000, 4000, config=small)

A process-wide configuration can also be read from the environment with
:py:meth:`SolverConfig.from_env` (variables ``VSG_BUDGET_MIB``,
``VSG_MAX_COUNTEREXAMPLES`` and ``VSG_COVERAGE``).
"""

import dataclasses
import os
from typing import Callable, Mapping, TypeVar

MIB = 1024 * 1024

_T = TypeVar("_T")


@dataclasses.dataclass(frozen=True)
class SolverConfig:  # pylint: disable=too-many-instance-attributes
    """Limits and thresholds of the toolkit.

    :param memory_budget_bytes: the largest allocation a grid computation
        may request.
    :param max_counterexamples: the cap on counterexamples stored in a
        verification report.
    :param coverage_threshold: the fraction of cells a segmentation must
        cover to pass.
    :param max_pq: the largest slope numerator or denominator tried by
        the boundary estimator.
    :param band_factor: the thickness of a scoring band, in multiples of
        ``p + q``.
    :param boundary_threshold: the smallest score of a reported boundary.
    :param percolation_span: the central fraction of a segment a path must
        cross to count as percolating.
    :param bench_warmup: the number of untimed queries before a benchmark.
    """

    memory_budget_bytes: int = 2048 * MIB
    max_counterexamples: int = 32
    coverage_threshold: float = 0.98
    max_pq: int = 20
    band_factor: int = 3
    boundary_threshold: float = 0.1
    percolation_span: float = 0.8
    bench_warmup: int = 100

    def with_budget_mib(self, mib: int) -> "SolverConfig":
        """Return a copy with a different memory budget.

        :param mib: the new budget in mebibytes.

        :return: the new configuration.

        :raises ValueError: if the budget is not positive.
        """
        if mib <= 0:
            raise ValueError(f"memory budget must be positive, got {mib}")
        return dataclasses.replace(self, memory_budget_bytes=mib * MIB)

    @classmethod
    def from_env(
        cls, environ: Mapping[str, str] | None = None
    ) -> "SolverConfig":
        """Build a configuration from environment variables.

        Unset variables keep their defaults.

        :param environ: the mapping to read, ``os.environ`` by default.

        :return: the configuration.

        :raises ValueError: if a variable holds a malformed value.
        """
        env = os.environ if environ is None else environ
        defaults = cls()
        budget_mib = _read(
            env, "VSG_BUDGET_MIB", int, defaults.memory_budget_bytes // MIB
        )
        if budget_mib <= 0:
            raise ValueError(
                f"VSG_BUDGET_MIB must be positive, got {budget_mib}"
            )
        coverage = _read(
            env, "VSG_COVERAGE", float, defaults.coverage_threshold
        )
        if not 0.0 <= coverage <= 1.0:
            raise ValueError(
                f"VSG_COVERAGE must lie in [0, 1], got {coverage}"
            )
        return cls(
            memory_budget_bytes=budget_mib * MIB,
            max_counterexamples=_read(
                env,
                "VSG_MAX_COUNTEREXAMPLES",
                int,
                defaults.max_counterexamples,
            ),
            coverage_threshold=coverage,
        )


def _read(
    env: Mapping[str, str], name: str, cast: Callable[[str], _T], default: _T
) -> _T:
    raw = env.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return cast(raw.strip())
    except ValueError as error:
        raise ValueError(f"{name} has a malformed value {raw!r}") from error


DEFAULT_CONFIG = SolverConfig()
