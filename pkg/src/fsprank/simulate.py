"""Seeded Monte Carlo study of measure bias and tie behaviour.

Scenarios draw every grade independently and uniformly from a fixed decimal
grid (default step 0.1, the natural granularity of expert assessments; a
continuous law would make exact ties vanishingly rare and change the tie
statistics qualitatively).

Reproducibility contract: scenario ``i`` of a run with seed ``s`` uses a
PCG64 generator seeded with ``SeedSequence([s, i])``.  The report is a pure
function of the configuration, so serial and parallel evaluation agree and
identical configs yield bit-identical reports.
"""

from __future__ import annotations

import io
import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

import numpy as np

from .core import (
    GRADE_SCALE,
    CumulativeScores,
    FuzzySoftSet,
    Grade,
    Measure,
    cumulative_scores,
    decision_measures,
)
from .errors import ParseError

DEFAULT_MEASURES = (Measure.G1, Measure.G2, Measure.G3)


@dataclass(frozen=True)
class SimulationConfig:
    """Shape, sampling grid and seed of one simulation run."""

    scenarios: int
    n_alternatives: int
    n_attributes: int
    grid_step: Grade = Grade(1000)
    seed: int = 0
    measures: tuple[Measure, ...] = DEFAULT_MEASURES

    def __post_init__(self) -> None:
        if self.scenarios < 0:
            raise ValueError("scenarios must be >= 0")
        if self.n_alternatives < 1 or self.n_attributes < 1:
            raise ValueError("need at least one alternative and one attribute")
        step = self.grid_step.units
        if step <= 0 or GRADE_SCALE % step != 0:
            raise ValueError(
                f"grid step {self.grid_step} must divide 1 evenly (e.g. 0.1, 0.05, 0.25)"
            )
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")
        if not self.measures:
            raise ValueError("at least one measure is required")
        if len(set(self.measures)) != len(self.measures):
            raise ValueError("duplicate measure selection")

    @property
    def grid_levels(self) -> int:
        """Number of distinct grades on the grid, endpoints included."""
        return GRADE_SCALE // self.grid_step.units + 1


@dataclass(frozen=True)
class MeasureStats:
    """Aggregates for one measure over a whole run.

    ``top_frequency[k]`` counts the scenarios in which alternative index k
    attains the maximum measure value; every argmax-tied alternative is
    credited, so the total may exceed the scenario count.  ``tie_count`` sums,
    over scenarios, the unordered pairs of alternatives with exactly equal
    measure values (at any rank, not just the top).
    """

    top_frequency: tuple[int, ...]
    tie_count: int


@dataclass(frozen=True)
class SimulationReport:
    config: SimulationConfig
    stats: Mapping[Measure, MeasureStats] = field(default_factory=dict)

    def stats_for(self, measure: Measure) -> MeasureStats:
        return self.stats[measure]


def scenario_stream(seed: int, index: int) -> np.random.Generator:
    """The deterministic substream assigned to one scenario index."""
    return np.random.default_rng(np.random.SeedSequence([seed, index]))


def random_scenario(
    stream: np.random.Generator, n: int, m: int, grid_step: Grade = Grade(1000)
) -> FuzzySoftSet:
    """Draw an n x m fuzzy soft set with grades uniform on the decimal grid."""
    step = grid_step.units
    levels = GRADE_SCALE // step + 1
    draws = stream.integers(0, levels, size=(n, m))
    return FuzzySoftSet(
        alternatives=tuple(f"a{i + 1}" for i in range(n)),
        attributes=tuple(f"e{j + 1}" for j in range(m)),
        grades=tuple(
            tuple(Grade(int(cell) * step) for cell in row) for row in draws
        ),
    )


def _measure_values(
    scores: list[CumulativeScores], n: int, m: int, measure: Measure
) -> list[Fraction | int]:
    triples = [decision_measures(s, n, m) for s in scores]
    index = {Measure.G1: 0, Measure.G2: 1, Measure.G3: 2}[measure]
    return [t[index] for t in triples]


def run_simulation(config: SimulationConfig) -> SimulationReport:
    """Run all scenarios and aggregate per-measure top frequencies and ties."""
    n = config.n_alternatives
    m = config.n_attributes
    top = {measure: [0] * n for measure in config.measures}
    ties = {measure: 0 for measure in config.measures}
    for index in range(config.scenarios):
        fss = random_scenario(
            scenario_stream(config.seed, index), n, m, config.grid_step
        )
        scores = cumulative_scores(fss)
        triples = [decision_measures(s, n, m) for s in scores]
        for measure in config.measures:
            pos = {Measure.G1: 0, Measure.G2: 1, Measure.G3: 2}[measure]
            values = [t[pos] for t in triples]
            best = max(values)
            for k, value in enumerate(values):
                if value == best:
                    top[measure][k] += 1
            ties[measure] += sum(
                count * (count - 1) // 2 for count in Counter(values).values()
            )
    return SimulationReport(
        config=config,
        stats={
            measure: MeasureStats(
                top_frequency=tuple(top[measure]), tie_count=ties[measure]
            )
            for measure in config.measures
        },
    )


def _config_payload(config: SimulationConfig) -> dict:
    return {
        "scenarios": config.scenarios,
        "alternatives": config.n_alternatives,
        "attributes": config.n_attributes,
        "grid_step": config.grid_step.text,
        "seed": config.seed,
        "measures": [measure.value for measure in config.measures],
    }


def emit_report(report: SimulationReport, format: str = "json") -> bytes:
    """Serialize a report as json, csv or a text histogram (deterministic)."""
    if format == "json":
        payload = {
            "config": _config_payload(report.config),
            "results": {
                measure.value: {
                    "top_frequency": list(report.stats[measure].top_frequency),
                    "tie_count": report.stats[measure].tie_count,
                }
                for measure in report.config.measures
            },
        }
        return (json.dumps(payload, ensure_ascii=False, indent=2) + "\n").encode("utf-8")
    if format == "csv":
        out = io.StringIO()
        out.write("measure,statistic,key,value\n")
        for measure in report.config.measures:
            stats = report.stats[measure]
            for k, count in enumerate(stats.top_frequency):
                out.write(f"{measure.value},top_frequency,{k},{count}\n")
            out.write(f"{measure.value},tie_count,,{stats.tie_count}\n")
        return out.getvalue().encode("utf-8")
    if format == "histogram":
        return _emit_histogram(report)
    raise ParseError(f"unknown report format {format!r}; expected json, csv or histogram")


_BAR_WIDTH = 40


def _emit_histogram(report: SimulationReport) -> bytes:
    config = report.config
    lines = [
        f"scenarios: {config.scenarios}  alternatives: {config.n_alternatives}  "
        f"attributes: {config.n_attributes}  grid_step: {config.grid_step.text}  "
        f"seed: {config.seed}"
    ]
    name_width = len(f"a{config.n_alternatives}")
    for measure in config.measures:
        stats = report.stats[measure]
        lines.append("")
        lines.append(f"{measure.value}  top-frequency (ties: {stats.tie_count})")
        peak = max(stats.top_frequency) if stats.top_frequency else 0
        for k, count in enumerate(stats.top_frequency):
            width = round(count / peak * _BAR_WIDTH) if peak else 0
            lines.append(f"  {f'a{k + 1}':<{name_width}}  {'#' * width:<{_BAR_WIDTH}}  {count}")
    return ("\n".join(lines) + "\n").encode("utf-8")
