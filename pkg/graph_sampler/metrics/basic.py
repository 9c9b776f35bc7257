# Copyright 2026 Isaacveg
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csgraph

from ..errors import GraphError
from ..graph import Graph


@dataclass(frozen=True)
class ComponentSummary:
    count: int
    labels: np.ndarray
    largest: np.ndarray

    @property
    def largest_fraction(self) -> float:
        if self.labels.shape[0] == 0:
            return 0.0
        return self.largest.shape[0] / self.labels.shape[0]


def average_degree(graph: Graph) -> float:
    if graph.node_count < 1:
        raise GraphError("average degree undefined: graph has no nodes")
    return 2.0 * graph.edge_count / graph.node_count


def density(graph: Graph) -> float:
    n = graph.node_count
    if n < 2:
        raise GraphError(f"density undefined for a graph with {n} node(s)")
    return 2.0 * graph.edge_count / (n * (n - 1))


def connected_components(graph: Graph) -> ComponentSummary:
    """Component count and labels; labels are numbered by smallest member id."""
    if graph.node_count == 0:
        empty = np.zeros(0, dtype=np.int64)
        return ComponentSummary(count=0, labels=empty, largest=empty)
    count, raw = csgraph.connected_components(graph.csr, directed=False)
    _, first_seen = np.unique(raw, return_index=True)
    rank = np.empty(count, dtype=np.int64)
    rank[np.argsort(first_seen)] = np.arange(count)
    labels = rank[raw]
    sizes = np.bincount(labels, minlength=count)
    largest = np.flatnonzero(labels == int(np.argmax(sizes)))
    return ComponentSummary(count=int(count), labels=labels, largest=largest)


def triangle_counts(graph: Graph) -> np.ndarray:
    neighbor_sets = [frozenset(neighbors) for neighbors in graph.adjacency]
    counts = [0] * graph.node_count
    for u, v in graph.edges.tolist():
        common = len(neighbor_sets[u] & neighbor_sets[v])
        counts[u] += common
        counts[v] += common
    # every triangle is seen from both edges incident to a corner
    return np.asarray(counts, dtype=np.int64) // 2


def local_clustering(graph: Graph) -> np.ndarray:
    degrees = graph.degrees.astype(np.float64)
    triangles = triangle_counts(graph).astype(np.float64)
    pairs = degrees * (degrees - 1.0)
    coefficients = np.zeros(graph.node_count, dtype=np.float64)
    eligible = degrees >= 2
    coefficients[eligible] = 2.0 * triangles[eligible] / pairs[eligible]
    return coefficients


def average_clustering(graph: Graph) -> float:
    if graph.node_count < 1:
        raise GraphError("clustering undefined: graph has no nodes")
    return float(local_clustering(graph).sum() / graph.node_count)
