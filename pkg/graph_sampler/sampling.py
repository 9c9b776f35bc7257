# Copyright 2026 Isaacveg
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0

from __future__ import annotations

from dataclasses import dataclass
from functools import partial, reduce
from typing import List, Tuple

import numpy as np

from .errors import GraphError, SampleSpecError
from .graph import Graph, edge_subgraph, induced_subgraph
from .models import SampleSpec, Strategy
from .seeding import derive_seed, make_rng
from .workers import map_ordered


@dataclass(frozen=True)
class VisitCounter:
    counts: np.ndarray

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    @property
    def visited_count(self) -> int:
        return int(np.count_nonzero(self.counts))

    def merge(self, other: "VisitCounter") -> "VisitCounter":
        return VisitCounter(self.counts + other.counts)

    def top(self, x: int) -> List[int]:
        """Ids of the ``x`` most visited nodes; ties go to the smaller id."""
        ids = np.arange(self.counts.shape[0])
        order = np.lexsort((ids, -self.counts))
        return [int(node) for node in order[:x]]


def edge_random_sample(graph: Graph, m: int, seed: int) -> Graph:
    if not 1 <= m <= graph.edge_count:
        raise SampleSpecError(
            f"Edge sample size {m} is outside 1..{graph.edge_count}"
        )
    rng = make_rng(seed)
    chosen = rng.choice(graph.edge_count, size=m, replace=False)
    return edge_subgraph(graph, chosen)


def node_random_sample(graph: Graph, k: int, seed: int) -> Graph:
    if not 1 <= k <= graph.node_count:
        raise SampleSpecError(
            f"Node sample size {k} is outside 1..{graph.node_count}"
        )
    rng = make_rng(seed)
    chosen = rng.choice(graph.node_count, size=k, replace=False)
    return induced_subgraph(graph, chosen.tolist())


def _walk(
    adjacency: Tuple[Tuple[int, ...], ...],
    starts: np.ndarray,
    iterations: int,
    seed: int,
) -> np.ndarray:
    rng = make_rng(seed)
    counts = [0] * len(adjacency)
    current = int(starts[rng.integers(starts.shape[0])])
    counts[current] += 1
    for draw in rng.random(iterations - 1).tolist():
        neighbors = adjacency[current]
        current = neighbors[int(draw * len(neighbors))]
        counts[current] += 1
    return np.asarray(counts, dtype=np.int64)


def _walk_run(graph: Graph, iterations: int, seed: int, run: int) -> np.ndarray:
    starts = np.flatnonzero(graph.degrees > 0)
    return _walk(graph.adjacency, starts, iterations, derive_seed(seed, run))


def random_walk_visit_counts(
    graph: Graph,
    iterations: int,
    runs: int,
    seed: int,
    *,
    workers: int = 1,
) -> VisitCounter:
    """Sum of visit tallies over ``runs`` independent walks.

    Each run starts at a uniformly chosen node of positive degree and records
    ``iterations`` positions, the start included. Run ``r`` draws from its own
    stream seeded with ``derive_seed(seed, r)``.
    """

    if iterations < 1 or runs < 1:
        raise SampleSpecError("iterations and runs must be at least 1")
    if graph.edge_count == 0:
        raise GraphError("walk impossible: graph has no edges")
    per_run = map_ordered(partial(_walk_run, graph, iterations, seed), range(runs), workers)
    return reduce(VisitCounter.merge, (VisitCounter(counts) for counts in per_run))


def random_walk_sample(
    graph: Graph,
    x: int,
    iterations: int,
    runs: int,
    seed: int,
    *,
    workers: int = 1,
) -> Graph:
    if not 1 <= x <= graph.node_count:
        raise SampleSpecError(f"Top-node count {x} is outside 1..{graph.node_count}")
    counter = random_walk_visit_counts(graph, iterations, runs, seed, workers=workers)
    visited = counter.visited_count
    if x > visited:
        raise SampleSpecError(
            f"Requested the top {x} nodes but the walks visited only {visited} nodes"
        )
    return induced_subgraph(graph, counter.top(x))


def draw_sample(graph: Graph, spec: SampleSpec, *, workers: int = 1) -> Graph:
    if spec.strategy is Strategy.ERS:
        return edge_random_sample(graph, spec.target, spec.seed)
    if spec.strategy is Strategy.NRS:
        return node_random_sample(graph, spec.target, spec.seed)
    return random_walk_sample(
        graph,
        spec.target,
        spec.rw_iterations,
        spec.rw_runs,
        spec.seed,
        workers=workers,
    )


def sample_graph_summary(graph: Graph) -> dict:
    return {"node_count": graph.node_count, "edge_count": graph.edge_count}
