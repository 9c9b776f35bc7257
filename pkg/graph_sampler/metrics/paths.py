# Copyright 2026 Isaacveg
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0

from __future__ import annotations

from collections import deque
from functools import partial
from typing import List, Sequence, Tuple

import numpy as np
from scipy.sparse import csgraph

from ..errors import GraphError
from ..graph import Graph, induced_subgraph
from ..workers import chunked, map_ordered
from .basic import connected_components

# Source chunk sizes are fixed so partial sums combine identically for any worker count.
DISTANCE_CHUNK = 256
BETWEENNESS_CHUNK = 64


def distances_from(graph: Graph, source: int) -> np.ndarray:
    """BFS hop distances from ``source``; unreachable nodes hold ``inf``."""
    if not 0 <= int(source) < graph.node_count:
        raise GraphError(f"Unknown source node {source} (graph has {graph.node_count} nodes)")
    adjacency = graph.adjacency
    distances = np.full(graph.node_count, np.inf)
    distances[source] = 0.0
    hops = [-1] * graph.node_count
    hops[source] = 0
    queue = deque([int(source)])
    while queue:
        v = queue.popleft()
        next_hop = hops[v] + 1
        for w in adjacency[v]:
            if hops[w] < 0:
                hops[w] = next_hop
                distances[w] = next_hop
                queue.append(w)
    return distances


def _distance_chunk(graph: Graph, sources: Sequence[int]) -> Tuple[int, int]:
    rows = csgraph.shortest_path(
        graph.csr,
        method="D",
        directed=False,
        unweighted=True,
        indices=list(sources),
    )
    return int(rows.max()), int(round(float(rows.sum())))


def diameter_and_apl(graph: Graph, *, workers: int = 1) -> Tuple[int, float]:
    """Diameter and average path length of the largest connected component.

    The average runs over ordered pairs ``u != v`` inside that component.
    """

    components = connected_components(graph)
    size = components.largest.shape[0]
    if size < 2:
        raise GraphError("diameter undefined: no connected component has two or more nodes")
    component = graph if size == graph.node_count else induced_subgraph(graph, components.largest.tolist())
    chunks = chunked(list(range(size)), DISTANCE_CHUNK)
    partials = map_ordered(partial(_distance_chunk, component), chunks, workers)
    diameter = max(longest for longest, _ in partials)
    total = sum(subtotal for _, subtotal in partials)
    return diameter, total / (size * (size - 1))


def _accumulate_source(
    adjacency: Tuple[Tuple[int, ...], ...],
    source: int,
    scores: List[float],
) -> None:
    n = len(adjacency)
    sigma = [0] * n
    dist = [-1] * n
    preds: List[List[int]] = [[] for _ in range(n)]
    sigma[source] = 1
    dist[source] = 0
    order: List[int] = []
    queue = deque([source])
    while queue:
        v = queue.popleft()
        order.append(v)
        next_hop = dist[v] + 1
        paths = sigma[v]
        for w in adjacency[v]:
            if dist[w] < 0:
                dist[w] = next_hop
                queue.append(w)
            if dist[w] == next_hop:
                sigma[w] += paths
                preds[w].append(v)

    delta = [0.0] * n
    for w in reversed(order):
        coeff = (1.0 + delta[w]) / sigma[w]
        for v in preds[w]:
            delta[v] += sigma[v] * coeff
        if w != source:
            scores[w] += delta[w]


def _betweenness_chunk(graph: Graph, sources: Sequence[int]) -> np.ndarray:
    adjacency = graph.adjacency
    scores = [0.0] * graph.node_count
    for source in sources:
        _accumulate_source(adjacency, source, scores)
    return np.asarray(scores, dtype=np.float64)


def betweenness_centrality(graph: Graph, *, workers: int = 1) -> np.ndarray:
    """Unnormalized shortest-path betweenness, each unordered pair counted once."""
    total = np.zeros(graph.node_count, dtype=np.float64)
    if graph.node_count == 0:
        return total
    chunks = chunked(list(range(graph.node_count)), BETWEENNESS_CHUNK)
    for scores in map_ordered(partial(_betweenness_chunk, graph), chunks, workers):
        total += scores
    return total / 2.0
