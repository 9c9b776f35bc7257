# Copyright 2026 Isaacveg
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0

from __future__ import annotations

import hashlib
import json
import logging
import os
import time
import warnings
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import OptimizeWarning, curve_fit

from .errors import GraphSamplerError, PlanError
from .graph import Graph, load_edge_list
from .metrics import betweenness_centrality, full_report
from .models import (
    PROPERTY_FIELDS,
    SAMPLE_FIELDS,
    CellResult,
    ExperimentPlan,
    PropertyReport,
    PropertyStats,
    SampleSpec,
    Strategy,
    SweepResult,
)
from .sampling import draw_sample
from .seeding import LOUVAIN_STREAM, derive_seed
from .storage import CellStorage
from .workers import CancelFn, map_ordered

LogFn = Callable[[str], None]

logger = logging.getLogger(__name__)

DEFAULT_SIZES: Dict[Strategy, Tuple[int, ...]] = {
    Strategy.ERS: (10000, 20000, 30000, 40000, 50000, 60000, 70000),
    Strategy.NRS: (100, 500, 1000, 1500, 2000, 2500, 3000, 3500),
    Strategy.RW: (100, 500, 1000, 1500, 2000, 2500, 3000),
}
DEFAULT_REPETITIONS = 10
DEFAULT_RW_ITERATIONS = 10000
DEFAULT_RW_RUNS = 10

REPETITIONS_NOTE = (
    "10-run averaging is stated for ERS only; it is applied to every strategy "
    "so all curves carry comparable error bars"
)
SEED_SCHEME = "cell seed = splitmix64 chain over (master_seed, size, repetition)"

# The seven graph properties compared across strategies.
COMPARED_PROPERTIES: Tuple[str, ...] = (
    "avg_degree",
    "density",
    "modularity",
    "avg_clustering",
    "diameter",
    "avg_path_length",
    "connected_components",
)
RW_FAVOURED = ("avg_clustering", "diameter", "avg_path_length", "connected_components")
UNIFORM_FAVOURED = ("avg_degree", "density", "modularity")


def default_plan(
    strategy: Strategy,
    *,
    master_seed: int = 0,
    dataset_path: str = "",
) -> ExperimentPlan:
    strategy = Strategy.parse(strategy)
    return ExperimentPlan(
        strategy=strategy,
        sizes=DEFAULT_SIZES[strategy],
        repetitions=DEFAULT_REPETITIONS,
        rw_iterations=DEFAULT_RW_ITERATIONS,
        rw_runs=DEFAULT_RW_RUNS,
        master_seed=master_seed,
        dataset_path=dataset_path,
    )


def cell_seed(plan: ExperimentPlan, size: int, repetition: int) -> int:
    return derive_seed(plan.master_seed, size, repetition)


def plan_fingerprint(plan: ExperimentPlan, graph: Graph) -> str:
    """Hash of everything besides the seed that shapes a cell's result."""
    parts = {"strategy": plan.strategy.value, "graph": graph.digest}
    if plan.strategy is Strategy.RW:
        parts["rw_iterations"] = plan.rw_iterations
        parts["rw_runs"] = plan.rw_runs
    return hashlib.sha256(json.dumps(parts, sort_keys=True).encode("ascii")).hexdigest()


def validate_plan(plan: ExperimentPlan, graph: Graph) -> None:
    limit = graph.edge_count if plan.strategy is Strategy.ERS else graph.node_count
    unit = "edges" if plan.strategy is Strategy.ERS else "nodes"
    too_large = [size for size in plan.sizes if size > limit]
    if too_large:
        raise PlanError(
            f"{plan.strategy.label} sizes {too_large} exceed the graph's {limit} {unit}"
        )


@dataclass(frozen=True)
class CellJob:
    graph: Graph
    spec: SampleSpec
    size: int
    repetition: int


def run_cell(job: CellJob) -> CellResult:
    spec = job.spec
    cell = CellResult(
        strategy=spec.strategy,
        size=job.size,
        repetition=job.repetition,
        seed=spec.seed,
    )
    try:
        sample = draw_sample(job.graph, spec)
        cell.node_count = sample.node_count
        cell.edge_count = sample.edge_count
        cell.report = full_report(sample, derive_seed(spec.seed, LOUVAIN_STREAM))
    except GraphSamplerError as exc:
        cell.report = None
        cell.error = str(exc)
    return cell


def aggregate_cells(cells: Sequence[CellResult], sizes: Sequence[int]) -> Dict[int, Dict[str, PropertyStats]]:
    aggregates: Dict[int, Dict[str, PropertyStats]] = {}
    for size in sizes:
        per_size: Dict[str, PropertyStats] = {}
        usable = [cell for cell in cells if cell.size == size and cell.ok]
        for name in SAMPLE_FIELDS + PROPERTY_FIELDS:
            values = np.asarray([cell.value(name) for cell in usable], dtype=np.float64)
            if values.size == 0:
                continue
            low, high = float(values.min()), float(values.max())
            mean = min(max(float(values.mean()), low), high)
            per_size[name] = PropertyStats(
                mean=mean,
                sd=float(values.std()),
                min=low,
                max=high,
                count=int(values.size),
            )
        if per_size:
            aggregates[size] = per_size
    return aggregates


def run_sweep(
    plan: ExperimentPlan,
    graph: Optional[Graph] = None,
    *,
    storage: Optional[CellStorage] = None,
    workers: int = 1,
    cancelled: Optional[CancelFn] = None,
    log: Optional[LogFn] = None,
) -> SweepResult:
    if graph is None:
        if not plan.dataset_path:
            raise PlanError("Plan has no dataset_path and no graph was given")
        graph, _ = load_edge_list(plan.dataset_path)
    validate_plan(plan, graph)
    fingerprint = plan_fingerprint(plan, graph)

    slots: List[Optional[CellResult]] = []
    pending: List[Tuple[int, CellJob]] = []
    for size in plan.sizes:
        for repetition in range(plan.repetitions):
            seed = cell_seed(plan, size, repetition)
            cached = (
                storage.get_cell(plan.strategy, size, repetition, seed, fingerprint)
                if storage
                else None
            )
            slots.append(cached)
            if cached is None:
                spec = SampleSpec(
                    strategy=plan.strategy,
                    target=size,
                    seed=seed,
                    rw_iterations=plan.rw_iterations,
                    rw_runs=plan.rw_runs,
                )
                pending.append((len(slots) - 1, CellJob(graph, spec, size, repetition)))

    result = SweepResult(plan=plan, skipped=len(slots) - len(pending))
    total = len(pending)

    def record(idx: int, _total: int, cell: CellResult) -> None:
        if storage:
            storage.upsert_cells([cell], fingerprint)
        if cell.error:
            logger.warning(
                "%s size=%d repetition=%d failed: %s",
                cell.strategy.label,
                cell.size,
                cell.repetition,
                cell.error,
            )
        if log:
            status = f"failed ({cell.error})" if cell.error else f"nodes={cell.node_count} edges={cell.edge_count}"
            log(f"[{idx}/{total}] {cell.strategy.label} size={cell.size} rep={cell.repetition}: {status}")

    computed = map_ordered(
        run_cell,
        [job for _, job in pending],
        workers,
        cancelled=cancelled,
        progress=record,
    )
    for (slot, _), cell in zip(pending, computed):
        slots[slot] = cell
    result.cancelled = len(computed) < total
    result.cells = [cell for cell in slots if cell is not None]
    result.aggregates = aggregate_cells(result.cells, plan.sizes)
    result.metadata = {
        "dataset": {
            "path": plan.dataset_path,
            "node_count": graph.node_count,
            "edge_count": graph.edge_count,
        },
        "fingerprint": fingerprint,
        "master_seed": plan.master_seed,
        "seed_scheme": SEED_SCHEME,
        "repetitions_deviation": REPETITIONS_NOTE,
    }
    return result


def baseline_report(graph: Graph, master_seed: int = 0, *, workers: int = 1) -> PropertyReport:
    return full_report(graph, derive_seed(master_seed, LOUVAIN_STREAM), workers=workers)


@dataclass(frozen=True)
class SeriesPoint:
    size: int
    mean: float
    sd: float


@dataclass(frozen=True)
class TrendFit:
    """A property's mean series extrapolated to the size of the full graph."""

    model: str
    target_size: int
    predicted: float
    gap: float
    residual: float

    def to_dict(self) -> dict:
        return {
            "model": self.model,
            "target_size": self.target_size,
            "predicted": self.predicted,
            "gap": self.gap,
            "residual": self.residual,
        }


@dataclass
class StrategySeries:
    strategy: Strategy
    points: Dict[str, List[SeriesPoint]] = field(default_factory=dict)
    final_size: Optional[int] = None
    final_gaps: Dict[str, float] = field(default_factory=dict)
    predictions: Dict[str, TrendFit] = field(default_factory=dict)


@dataclass
class ComparisonTable:
    baseline: PropertyReport
    series: List[StrategySeries] = field(default_factory=list)
    common_node_size: Optional[int] = None

    def gap(self, strategy: Strategy, name: str) -> Optional[float]:
        for entry in self.series:
            if entry.strategy is strategy and name in entry.final_gaps:
                return entry.final_gaps[name]
        return None

    def to_dict(self) -> dict:
        return {
            "baseline": self.baseline.to_dict(),
            "common_node_size": self.common_node_size,
            "series": [
                {
                    "strategy": entry.strategy.value,
                    "final_size": entry.final_size,
                    "final_gaps": dict(entry.final_gaps),
                    "predictions": {
                        name: fit.to_dict() for name, fit in entry.predictions.items()
                    },
                    "points": {
                        name: [
                            {"size": point.size, "mean": point.mean, "sd": point.sd}
                            for point in points
                        ]
                        for name, points in entry.points.items()
                    },
                }
                for entry in self.series
            ],
        }


# NRS and RW sizes count nodes, so their gaps are compared at one shared size.
NODE_STRATEGIES = (Strategy.NRS, Strategy.RW)
EXPONENTIAL_MIN_POINTS = 4


def _saturating(t: np.ndarray, a: float, b: float, c: float) -> np.ndarray:
    return a + b * np.exp(-c * t)


def _fit_exponential(x: np.ndarray, y: np.ndarray) -> Optional[Tuple[float, float]]:
    guess = (float(y[-1]), float(y[0] - y[-1]), 1.0)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", OptimizeWarning)
            warnings.simplefilter("ignore", RuntimeWarning)
            params, _ = curve_fit(
                _saturating,
                x,
                y,
                p0=guess,
                bounds=([-np.inf, -np.inf, 0.0], [np.inf, np.inf, np.inf]),
            )
    except (RuntimeError, ValueError):
        return None
    predicted = float(_saturating(np.asarray(1.0), *params))
    residual = float(np.sum((y - _saturating(x, *params)) ** 2))
    if not (np.isfinite(predicted) and np.isfinite(residual)):
        return None
    return predicted, residual


def fit_trend(
    sizes: Sequence[int],
    means: Sequence[float],
    target_size: int,
    baseline_value: float,
) -> Optional[TrendFit]:
    """Extrapolate a mean series to ``target_size``.

    A straight line is always fitted; with enough points a saturating
    exponential ``a + b * exp(-c * size / target_size)`` is tried as well and
    kept when it leaves a smaller residual.
    """

    if len(sizes) < 2 or target_size < 1:
        return None
    x = np.asarray(sizes, dtype=np.float64) / float(target_size)
    y = np.asarray(means, dtype=np.float64)
    slope, intercept = np.polyfit(x, y, 1)
    model = "linear"
    predicted = float(slope + intercept)
    residual = float(np.sum((y - (slope * x + intercept)) ** 2))
    if x.size >= EXPONENTIAL_MIN_POINTS:
        exponential = _fit_exponential(x, y)
        tolerance = 1e-12 * max(1.0, float(np.sum(y ** 2)))
        if exponential is not None and exponential[1] < residual - tolerance:
            model = "exponential"
            predicted, residual = exponential
    return TrendFit(
        model=model,
        target_size=target_size,
        predicted=predicted,
        gap=abs(predicted - baseline_value),
        residual=residual,
    )


def _dataset_key(result: SweepResult) -> Tuple[object, object]:
    dataset = result.metadata.get("dataset", {})
    return dataset.get("node_count"), dataset.get("edge_count")


def _aggregated_sizes(result: SweepResult) -> List[int]:
    return [size for size in result.plan.sizes if size in result.aggregates]


def common_node_size(results: Sequence[SweepResult]) -> Optional[int]:
    """Largest size every NRS and RW sweep has aggregates for."""
    node_sweeps = [result for result in results if result.strategy in NODE_STRATEGIES]
    if len(node_sweeps) < 2:
        return None
    shared = set(_aggregated_sizes(node_sweeps[0]))
    for result in node_sweeps[1:]:
        shared &= set(_aggregated_sizes(result))
    return max(shared) if shared else None


def comparative_table(results: Sequence[SweepResult], baseline: PropertyReport) -> ComparisonTable:
    if not results:
        raise PlanError("Comparison needs at least one sweep result")
    keys = {_dataset_key(result) for result in results}
    if len(keys) > 1:
        raise PlanError(f"Sweeps were run on different datasets: {sorted(keys, key=str)}")

    shared = common_node_size(results)
    if shared is None and sum(1 for r in results if r.strategy in NODE_STRATEGIES) > 1:
        logger.warning("NRS and RW sweeps share no sample size; gaps use each sweep's last size")
    table = ComparisonTable(baseline=baseline, common_node_size=shared)
    node_count, edge_count = next(iter(keys))
    for result in results:
        entry = StrategySeries(strategy=result.strategy)
        target = edge_count if result.strategy is Strategy.ERS else node_count
        for name in COMPARED_PROPERTIES:
            entry.points[name] = [
                SeriesPoint(size=size, mean=stats[name].mean, sd=stats[name].sd)
                for size, stats in sorted(result.aggregates.items())
                if name in stats
            ]
            if target:
                fit = fit_trend(
                    [point.size for point in entry.points[name]],
                    [point.mean for point in entry.points[name]],
                    int(target),
                    float(getattr(baseline, name)),
                )
                if fit is not None:
                    entry.predictions[name] = fit
        sizes = _aggregated_sizes(result)
        if sizes:
            use_shared = result.strategy in NODE_STRATEGIES and shared is not None
            entry.final_size = shared if use_shared else sizes[-1]
            final = result.aggregates[entry.final_size]
            for name in COMPARED_PROPERTIES:
                if name in final:
                    entry.final_gaps[name] = abs(final[name].mean - float(getattr(baseline, name)))
        table.series.append(entry)
    return table


def recommend_strategies(table: ComparisonTable) -> Dict[str, Strategy]:
    """Strategy with the smallest final-size gap for each property."""
    picks: Dict[str, Strategy] = {}
    for name in COMPARED_PROPERTIES:
        ranked = [
            (entry.final_gaps[name], order, entry.strategy)
            for order, entry in enumerate(table.series)
            if name in entry.final_gaps
        ]
        if ranked:
            picks[name] = min(ranked, key=lambda item: (item[0], item[1]))[2]
    return picks


@dataclass(frozen=True)
class TrendCheck:
    property: str
    favoured: str
    held: bool
    gaps: Dict[str, float]


def trend_check(table: ComparisonTable) -> List[TrendCheck]:
    """Evaluate which strategy tracks each property best; logged, never raised.

    Random walks are expected to win on clustering, diameter, path length and
    components, the uniform strategies on degree, density and modularity.
    """

    checks: List[TrendCheck] = []
    for name in RW_FAVOURED + UNIFORM_FAVOURED:
        gaps = {
            strategy.value: gap
            for strategy in Strategy
            if (gap := table.gap(strategy, name)) is not None
        }
        if len(gaps) < 3:
            continue
        rw_gap = gaps[Strategy.RW.value]
        others = [gaps[Strategy.ERS.value], gaps[Strategy.NRS.value]]
        if name in RW_FAVOURED:
            favoured, held = "rw", all(rw_gap < other for other in others)
        else:
            favoured, held = "ers/nrs", all(other < rw_gap for other in others)
        check = TrendCheck(property=name, favoured=favoured, held=held, gaps=gaps)
        logger.info(
            "trend %s: favoured %s, %s (gaps %s)",
            name,
            favoured,
            "held" if held else "not held",
            ", ".join(f"{key}={value:.4g}" for key, value in gaps.items()),
        )
        checks.append(check)
    return checks


@dataclass(frozen=True)
class SpeedupResult:
    full_seconds: float
    sample_seconds: float
    full_nodes: int
    sample_nodes: int

    @property
    def factor(self) -> float:
        if self.sample_seconds <= 0:
            return float("inf")
        return self.full_seconds / self.sample_seconds

    def to_dict(self) -> dict:
        return {
            "full_seconds": self.full_seconds,
            "sample_seconds": self.sample_seconds,
            "full_nodes": self.full_nodes,
            "sample_nodes": self.sample_nodes,
            "factor": self.factor,
        }


def betweenness_speedup(graph: Graph, sample: Graph, *, workers: int = 1) -> SpeedupResult:
    started = time.perf_counter()
    betweenness_centrality(graph, workers=workers)
    full_seconds = time.perf_counter() - started
    started = time.perf_counter()
    betweenness_centrality(sample, workers=workers)
    sample_seconds = time.perf_counter() - started
    return SpeedupResult(
        full_seconds=full_seconds,
        sample_seconds=sample_seconds,
        full_nodes=graph.node_count,
        sample_nodes=sample.node_count,
    )


@dataclass
class ReplicationResult:
    baseline: PropertyReport
    sweeps: List[SweepResult]
    table: ComparisonTable
    checks: List[TrendCheck]
    recommendations: Dict[str, Strategy]
    speedup: Optional[SpeedupResult] = None


def replicate(
    graph: Graph,
    *,
    master_seed: int = 0,
    dataset_path: str = "",
    repetitions: int = DEFAULT_REPETITIONS,
    sizes: Optional[Mapping[Strategy, Sequence[int]]] = None,
    rw_iterations: int = DEFAULT_RW_ITERATIONS,
    rw_runs: int = DEFAULT_RW_RUNS,
    output_dir: Optional[str] = None,
    speedup_sample: int = 0,
    workers: int = 1,
    cancelled: Optional[CancelFn] = None,
    log: Optional[LogFn] = None,
) -> ReplicationResult:
    """Baseline, the three sweeps and their comparison in one call.

    ``sizes`` replaces the default schedule of the strategies it names.
    """
    if log:
        log(f"baseline: {graph.node_count} nodes, {graph.edge_count} edges")
    baseline = baseline_report(graph, master_seed, workers=workers)
    overrides = {Strategy.parse(key): tuple(value) for key, value in (sizes or {}).items()}
    sweeps: List[SweepResult] = []
    for strategy in Strategy:
        plan = default_plan(strategy, master_seed=master_seed, dataset_path=dataset_path)
        plan = plan.with_overrides(
            sizes=overrides.get(strategy),
            repetitions=repetitions,
            rw_iterations=rw_iterations,
            rw_runs=rw_runs,
        )
        storage = CellStorage(os.path.join(output_dir, strategy.value)) if output_dir else None
        if log:
            log(f"sweep {strategy.label}: sizes {list(plan.sizes)} x {plan.repetitions}")
        sweeps.append(
            run_sweep(plan, graph, storage=storage, workers=workers, cancelled=cancelled, log=log)
        )
    table = comparative_table(sweeps, baseline)
    checks = trend_check(table)
    speedup = None
    if speedup_sample:
        spec = SampleSpec(
            strategy=Strategy.RW,
            target=speedup_sample,
            seed=derive_seed(master_seed, speedup_sample),
            rw_iterations=rw_iterations,
            rw_runs=rw_runs,
        )
        speedup = betweenness_speedup(graph, draw_sample(graph, spec), workers=workers)
        logger.info("betweenness speedup on a %d-node sample: %.1fx", speedup.sample_nodes, speedup.factor)
    return ReplicationResult(
        baseline=baseline,
        sweeps=sweeps,
        table=table,
        checks=checks,
        recommendations=recommend_strategies(table),
        speedup=speedup,
    )
