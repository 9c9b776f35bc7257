# Copyright 2026 Isaacveg
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0

from __future__ import annotations

from dataclasses import dataclass, field, fields, replace
from enum import Enum
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import PlanError, SampleSpecError

SEED_LIMIT = 1 << 64

PROPERTY_FIELDS: Tuple[str, ...] = (
    "avg_degree",
    "density",
    "modularity",
    "avg_clustering",
    "diameter",
    "avg_path_length",
    "connected_components",
    "largest_component_fraction",
)

# Row dimensions recorded for every cell next to the property values.
SAMPLE_FIELDS: Tuple[str, ...] = ("node_count", "edge_count")


class Strategy(str, Enum):
    ERS = "ers"
    NRS = "nrs"
    RW = "rw"

    @classmethod
    def parse(cls, value: Any) -> "Strategy":
        if isinstance(value, Strategy):
            return value
        text = str(value or "").strip().lower()
        for strategy in cls:
            if strategy.value == text:
                return strategy
        raise SampleSpecError(f"Unknown strategy: {value!r} (expected one of ers, nrs, rw)")

    @property
    def label(self) -> str:
        return self.value.upper()


def _check_seed(seed: Any, error_cls: type) -> int:
    try:
        value = int(seed)
    except (TypeError, ValueError):
        raise error_cls(f"Seed must be an integer, got {seed!r}") from None
    if not 0 <= value < SEED_LIMIT:
        raise error_cls(f"Seed must fit in 64 unsigned bits, got {value}")
    return value


def _check_count(value: Any, name: str, error_cls: type) -> int:
    try:
        count = int(value)
    except (TypeError, ValueError):
        raise error_cls(f"{name} must be an integer, got {value!r}") from None
    if count < 1:
        raise error_cls(f"{name} must be at least 1, got {count}")
    return count


@dataclass(frozen=True)
class SampleSpec:
    strategy: Strategy
    target: int
    seed: int = 0
    rw_iterations: int = 10000
    rw_runs: int = 10

    def __post_init__(self) -> None:
        object.__setattr__(self, "strategy", Strategy.parse(self.strategy))
        object.__setattr__(self, "seed", _check_seed(self.seed, SampleSpecError))
        object.__setattr__(self, "target", _check_count(self.target, "Sample target", SampleSpecError))
        object.__setattr__(self, "rw_iterations", _check_count(self.rw_iterations, "rw_iterations", SampleSpecError))
        object.__setattr__(self, "rw_runs", _check_count(self.rw_runs, "rw_runs", SampleSpecError))

    def to_dict(self) -> dict:
        return {
            "strategy": self.strategy.value,
            "target": self.target,
            "rw_iterations": self.rw_iterations,
            "rw_runs": self.rw_runs,
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "SampleSpec":
        missing = [name for name in ("strategy", "target") if name not in data]
        if missing:
            raise SampleSpecError(f"Sample spec is missing fields: {', '.join(missing)}")
        return cls(
            strategy=data["strategy"],
            target=data["target"],
            seed=data.get("seed", 0),
            rw_iterations=data.get("rw_iterations", 10000),
            rw_runs=data.get("rw_runs", 10),
        )


@dataclass(frozen=True)
class LoadStats:
    node_count: int
    edge_count: int
    duplicates_dropped: int = 0
    self_loops_dropped: int = 0

    def to_dict(self) -> dict:
        return {
            "node_count": self.node_count,
            "edge_count": self.edge_count,
            "duplicates_dropped": self.duplicates_dropped,
            "self_loops_dropped": self.self_loops_dropped,
        }


@dataclass(frozen=True)
class PropertyReport:
    avg_degree: float
    density: float
    modularity: float
    avg_clustering: float
    diameter: int
    avg_path_length: float
    connected_components: int
    largest_component_fraction: float

    def to_dict(self) -> dict:
        return {name: getattr(self, name) for name in PROPERTY_FIELDS}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "PropertyReport":
        missing = [name for name in PROPERTY_FIELDS if name not in data]
        if missing:
            raise ValueError(f"Property report is missing fields: {', '.join(missing)}")
        return cls(
            avg_degree=float(data["avg_degree"]),
            density=float(data["density"]),
            modularity=float(data["modularity"]),
            avg_clustering=float(data["avg_clustering"]),
            diameter=int(data["diameter"]),
            avg_path_length=float(data["avg_path_length"]),
            connected_components=int(data["connected_components"]),
            largest_component_fraction=float(data["largest_component_fraction"]),
        )


@dataclass(frozen=True)
class Partition:
    community: Tuple[int, ...]

    @classmethod
    def from_labels(cls, labels: Sequence[Any]) -> "Partition":
        """Relabel arbitrary community keys to dense ids in first-seen order."""
        dense: Dict[Any, int] = {}
        community = []
        for label in labels:
            if label not in dense:
                dense[label] = len(dense)
            community.append(dense[label])
        return cls(community=tuple(community))

    @property
    def community_count(self) -> int:
        return len(set(self.community))

    def __len__(self) -> int:
        return len(self.community)


@dataclass(frozen=True)
class ExperimentPlan:
    strategy: Strategy
    sizes: Tuple[int, ...]
    repetitions: int = 10
    rw_iterations: int = 10000
    rw_runs: int = 10
    master_seed: int = 0
    dataset_path: str = ""

    def __post_init__(self) -> None:
        try:
            strategy = Strategy.parse(self.strategy)
        except SampleSpecError as exc:
            raise PlanError(str(exc)) from None
        object.__setattr__(self, "strategy", strategy)
        if isinstance(self.sizes, (str, bytes)) or not hasattr(self.sizes, "__iter__"):
            raise PlanError(f"Sample sizes must be a list of integers, got {self.sizes!r}")
        sizes = tuple(_check_count(size, "Sample size", PlanError) for size in self.sizes)
        if not sizes:
            raise PlanError("Plan needs at least one sample size")
        if any(later <= earlier for earlier, later in zip(sizes, sizes[1:])):
            raise PlanError(f"Sample sizes must be strictly increasing: {list(sizes)}")
        object.__setattr__(self, "sizes", sizes)
        object.__setattr__(self, "repetitions", _check_count(self.repetitions, "repetitions", PlanError))
        object.__setattr__(self, "rw_iterations", _check_count(self.rw_iterations, "rw_iterations", PlanError))
        object.__setattr__(self, "rw_runs", _check_count(self.rw_runs, "rw_runs", PlanError))
        object.__setattr__(self, "master_seed", _check_seed(self.master_seed, PlanError))
        object.__setattr__(self, "dataset_path", str(self.dataset_path or ""))

    def with_overrides(self, **overrides: Any) -> "ExperimentPlan":
        known = {item.name for item in fields(self)}
        unknown = set(overrides) - known
        if unknown:
            raise PlanError(f"Unknown plan fields: {', '.join(sorted(unknown))}")
        changes = {name: value for name, value in overrides.items() if value is not None}
        return replace(self, **changes)

    def to_dict(self) -> dict:
        return {
            "strategy": self.strategy.value,
            "sizes": list(self.sizes),
            "repetitions": self.repetitions,
            "rw_iterations": self.rw_iterations,
            "rw_runs": self.rw_runs,
            "master_seed": self.master_seed,
            "dataset_path": self.dataset_path,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "ExperimentPlan":
        missing = [name for name in ("strategy", "sizes") if name not in data]
        if missing:
            raise PlanError(f"Plan is missing fields: {', '.join(missing)}")
        return cls(
            strategy=data["strategy"],
            sizes=tuple(data["sizes"]),
            repetitions=data.get("repetitions", 10),
            rw_iterations=data.get("rw_iterations", 10000),
            rw_runs=data.get("rw_runs", 10),
            master_seed=data.get("master_seed", 0),
            dataset_path=data.get("dataset_path", ""),
        )


@dataclass
class CellResult:
    strategy: Strategy
    size: int
    repetition: int
    seed: int
    node_count: int = 0
    edge_count: int = 0
    report: Optional[PropertyReport] = None
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None and self.report is not None

    def value(self, name: str) -> Optional[float]:
        if name in SAMPLE_FIELDS:
            return float(getattr(self, name))
        if self.report is None:
            return None
        return float(getattr(self.report, name))

    def to_row(self) -> dict:
        row: Dict[str, Any] = {
            "strategy": self.strategy.value,
            "size": self.size,
            "repetition": self.repetition,
            "seed": self.seed,
            "node_count": self.node_count,
            "edge_count": self.edge_count,
        }
        report = self.report.to_dict() if self.report else {}
        for name in PROPERTY_FIELDS:
            row[name] = report.get(name, "")
        row["error"] = self.error or ""
        return row

    def to_dict(self) -> dict:
        return {
            "strategy": self.strategy.value,
            "size": self.size,
            "repetition": self.repetition,
            "seed": self.seed,
            "node_count": self.node_count,
            "edge_count": self.edge_count,
            "report": self.report.to_dict() if self.report else None,
            "error": self.error,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "CellResult":
        report = data.get("report")
        return cls(
            strategy=Strategy.parse(data["strategy"]),
            size=int(data["size"]),
            repetition=int(data["repetition"]),
            seed=int(data["seed"]),
            node_count=int(data.get("node_count", 0)),
            edge_count=int(data.get("edge_count", 0)),
            report=PropertyReport.from_dict(report) if report else None,
            error=data.get("error"),
        )


@dataclass(frozen=True)
class PropertyStats:
    mean: float
    sd: float
    min: float
    max: float
    count: int

    def to_dict(self) -> dict:
        return {
            "mean": self.mean,
            "sd": self.sd,
            "min": self.min,
            "max": self.max,
            "count": self.count,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "PropertyStats":
        return cls(
            mean=float(data["mean"]),
            sd=float(data["sd"]),
            min=float(data["min"]),
            max=float(data["max"]),
            count=int(data["count"]),
        )


@dataclass
class SweepResult:
    plan: ExperimentPlan
    cells: List[CellResult] = field(default_factory=list)
    aggregates: Dict[int, Dict[str, PropertyStats]] = field(default_factory=dict)
    metadata: Dict[str, Any] = field(default_factory=dict)
    skipped: int = 0
    cancelled: bool = False

    @property
    def strategy(self) -> Strategy:
        return self.plan.strategy

    @property
    def failures(self) -> List[CellResult]:
        return [cell for cell in self.cells if cell.error is not None]

    def cells_for(self, size: int) -> List[CellResult]:
        return [cell for cell in self.cells if cell.size == size]

    def to_dict(self) -> dict:
        return {
            "plan": self.plan.to_dict(),
            "metadata": dict(self.metadata),
            "cells": [cell.to_dict() for cell in self.cells],
            "aggregates": {
                str(size): {name: stats.to_dict() for name, stats in per_size.items()}
                for size, per_size in self.aggregates.items()
            },
            "skipped": self.skipped,
            "cancelled": self.cancelled,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "SweepResult":
        return cls(
            plan=ExperimentPlan.from_dict(data["plan"]),
            cells=[CellResult.from_dict(item) for item in data.get("cells", [])],
            aggregates={
                int(size): {
                    name: PropertyStats.from_dict(stats) for name, stats in per_size.items()
                }
                for size, per_size in data.get("aggregates", {}).items()
            },
            metadata=dict(data.get("metadata", {})),
            skipped=int(data.get("skipped", 0)),
            cancelled=bool(data.get("cancelled", False)),
        )
