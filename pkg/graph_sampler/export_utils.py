# Copyright 2026 Isaacveg
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0

from __future__ import annotations

import csv
import json
import os
from typing import Dict, Iterable, List, Sequence, TextIO, Union

import numpy as np

from .experiment import COMPARED_PROPERTIES, ComparisonTable, recommend_strategies
from .graph import Graph
from .models import PROPERTY_FIELDS, Partition, SweepResult

CSV_FIELDS: List[str] = [
    "strategy",
    "size",
    "repetition",
    "seed",
    "node_count",
    "edge_count",
    *PROPERTY_FIELDS,
    "error",
]

# One file per chart panel: sample size first, then the seven properties.
PLOT_PANELS = ("sample_size",) + COMPARED_PROPERTIES

PROPERTY_TITLES: Dict[str, str] = {
    "avg_degree": "Average degree",
    "density": "Density",
    "modularity": "Modularity",
    "avg_clustering": "Average clustering coefficient",
    "diameter": "Diameter",
    "avg_path_length": "Average path length",
    "connected_components": "Connected components",
}


def emit_csv(result: SweepResult, stream: TextIO) -> None:
    writer = csv.DictWriter(stream, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for cell in result.cells:
        writer.writerow(cell.to_row())


def emit_json(result: SweepResult, stream: TextIO) -> None:
    json.dump(result.to_dict(), stream, indent=2)
    stream.write("\n")


def load_sweep_json(stream: TextIO) -> SweepResult:
    return SweepResult.from_dict(json.load(stream))


def _as_results(results: Union[SweepResult, Sequence[SweepResult]]) -> List[SweepResult]:
    if isinstance(results, SweepResult):
        return [results]
    return list(results)


def _panel_rows(results: Iterable[SweepResult], panel: str) -> List[List[object]]:
    rows: List[List[object]] = []
    for result in results:
        for size in result.plan.sizes:
            stats = result.aggregates.get(size)
            if not stats:
                continue
            if panel == "sample_size":
                nodes, edges = stats["node_count"], stats["edge_count"]
                rows.append([result.strategy.value, size, nodes.mean, nodes.sd, edges.mean, edges.sd])
            elif panel in stats:
                item = stats[panel]
                rows.append([result.strategy.value, size, item.mean, item.sd, item.min, item.max])
    return rows


def emit_plot_series(results: Union[SweepResult, Sequence[SweepResult]], directory: str) -> List[str]:
    """Write one CSV per chart panel, long format with a strategy column."""
    items = _as_results(results)
    os.makedirs(directory, exist_ok=True)
    paths = []
    for panel in PLOT_PANELS:
        if panel == "sample_size":
            header = ["strategy", "size", "nodes_mean", "nodes_sd", "edges_mean", "edges_sd"]
        else:
            header = ["strategy", "size", "mean", "sd", "min", "max"]
        path = os.path.join(directory, f"{panel}.csv")
        with open(path, "w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(_panel_rows(items, panel))
        paths.append(path)
    return paths


def emit_partition_csv(graph: Graph, partition: Partition, stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["node_label", "community_id"])
    for label, community in zip(graph.labels, partition.community):
        writer.writerow([label, community])


def emit_betweenness_csv(graph: Graph, scores: np.ndarray, stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["node_label", "betweenness"])
    for label, score in zip(graph.labels, scores.tolist()):
        writer.writerow([label, score])


def emit_summary_markdown(table: ComparisonTable, stream: TextIO) -> None:
    picks = recommend_strategies(table)
    header = ["Property", "Baseline"]
    for entry in table.series:
        header.append(f"{entry.strategy.label} gap @ {entry.final_size}")
    header.append("Closest")
    stream.write("| " + " | ".join(header) + " |\n")
    stream.write("|" + "---|" * len(header) + "\n")
    for name in COMPARED_PROPERTIES:
        cells = [PROPERTY_TITLES[name], f"{float(getattr(table.baseline, name)):.4g}"]
        for entry in table.series:
            gap = entry.final_gaps.get(name)
            cells.append("n/a" if gap is None else f"{gap:.4g}")
        pick = picks.get(name)
        cells.append(pick.label if pick else "n/a")
        stream.write("| " + " | ".join(cells) + " |\n")

    if not any(entry.predictions for entry in table.series):
        return
    stream.write("\n")
    header = ["Property", "Baseline"]
    for entry in table.series:
        target = next(iter(entry.predictions.values()), None)
        size = target.target_size if target else "n/a"
        header.append(f"{entry.strategy.label} predicted @ {size}")
    stream.write("| " + " | ".join(header) + " |\n")
    stream.write("|" + "---|" * len(header) + "\n")
    for name in COMPARED_PROPERTIES:
        cells = [PROPERTY_TITLES[name], f"{float(getattr(table.baseline, name)):.4g}"]
        for entry in table.series:
            fit = entry.predictions.get(name)
            cells.append("n/a" if fit is None else f"{fit.predicted:.4g} ({fit.model}, gap {fit.gap:.4g})")
        stream.write("| " + " | ".join(cells) + " |\n")
