# Copyright 2026 Isaacveg
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0

"""Louvain community detection and Newman modularity.

Each level shuffles the node visiting order with the seeded generator, moves
single nodes to the neighboring community with the largest modularity gain
until a full pass improves modularity by no more than ``threshold``, then
collapses communities into weighted nodes and repeats on the smaller graph.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

import numpy as np

from ..errors import GraphError
from ..graph import Graph
from ..models import Partition
from ..seeding import make_rng

GAIN_THRESHOLD = 1e-7

WeightedAdjacency = List[Dict[int, float]]


def modularity(graph: Graph, partition: Partition) -> float:
    if len(partition) != graph.node_count:
        raise GraphError(
            f"Partition labels {len(partition)} nodes but the graph has {graph.node_count}"
        )
    if graph.edge_count == 0:
        raise GraphError("modularity undefined: graph has no edges")
    community = np.asarray(partition.community, dtype=np.int64)
    if community.size and community.min() < 0:
        raise GraphError("Community labels must be non-negative")
    groups = int(community.max()) + 1 if community.size else 0
    edges = graph.edges
    left = community[edges[:, 0]]
    inside = left == community[edges[:, 1]]
    internal = np.bincount(left[inside], minlength=groups).astype(np.float64)
    degree_sums = np.bincount(community, weights=graph.degrees.astype(np.float64), minlength=groups)
    m = float(graph.edge_count)
    return float(np.sum(internal / m - (degree_sums / (2.0 * m)) ** 2))


def _level_modularity(
    adjacency: WeightedAdjacency,
    loops: List[float],
    community: List[int],
    strength: List[float],
    m2: float,
) -> float:
    internal: Dict[int, float] = {}
    totals: Dict[int, float] = {}
    for node, neighbors in enumerate(adjacency):
        c = community[node]
        weight = 2.0 * loops[node]
        for other, w in neighbors.items():
            if community[other] == c:
                weight += w
        internal[c] = internal.get(c, 0.0) + weight
        totals[c] = totals.get(c, 0.0) + strength[node]
    return sum(internal.get(c, 0.0) / m2 - (total / m2) ** 2 for c, total in totals.items())


def _one_level(
    adjacency: WeightedAdjacency,
    loops: List[float],
    m2: float,
    rng: np.random.Generator,
    threshold: float,
) -> Tuple[List[int], bool]:
    size = len(adjacency)
    strength = [sum(neighbors.values()) + 2.0 * loops[node] for node, neighbors in enumerate(adjacency)]
    community = list(range(size))
    totals: Dict[int, float] = {node: strength[node] for node in range(size)}
    order = rng.permutation(size).tolist()
    moved_any = False
    current = _level_modularity(adjacency, loops, community, strength, m2)

    while True:
        moved = False
        for node in order:
            home = community[node]
            k = strength[node]
            links: Dict[int, float] = {}
            for other, w in adjacency[node].items():
                c = community[other]
                links[c] = links.get(c, 0.0) + w
            totals[home] -= k
            best = home
            best_gain = links.get(home, 0.0) - totals[home] * k / m2
            for c, w in links.items():
                gain = w - totals[c] * k / m2
                if gain > best_gain:
                    best, best_gain = c, gain
            totals[best] = totals.get(best, 0.0) + k
            if best != home:
                community[node] = best
                moved = True
                moved_any = True
        if not moved:
            break
        updated = _level_modularity(adjacency, loops, community, strength, m2)
        if updated - current <= threshold:
            break
        current = updated
    return community, moved_any


def _aggregate(
    adjacency: WeightedAdjacency,
    loops: List[float],
    community: List[int],
) -> Tuple[WeightedAdjacency, List[float], List[int]]:
    dense: Dict[int, int] = {}
    for c in community:
        if c not in dense:
            dense[c] = len(dense)
    mapping = [dense[c] for c in community]
    merged: WeightedAdjacency = [{} for _ in range(len(dense))]
    merged_loops = [0.0] * len(dense)
    for node, neighbors in enumerate(adjacency):
        c = mapping[node]
        merged_loops[c] += loops[node]
        for other, w in neighbors.items():
            d = mapping[other]
            if d == c:
                # internal edges are seen from both endpoints
                merged_loops[c] += w / 2.0
            else:
                merged[c][d] = merged[c].get(d, 0.0) + w
    return merged, merged_loops, mapping


def louvain_communities(graph: Graph, seed: int, *, threshold: float = GAIN_THRESHOLD) -> Partition:
    if graph.edge_count == 0:
        raise GraphError("modularity undefined: graph has no edges")
    rng = make_rng(seed)
    adjacency: WeightedAdjacency = [dict.fromkeys(neighbors, 1.0) for neighbors in graph.adjacency]
    loops = [0.0] * graph.node_count
    membership = list(range(graph.node_count))
    m2 = 2.0 * graph.edge_count

    while True:
        community, improved = _one_level(adjacency, loops, m2, rng, threshold)
        if not improved:
            break
        adjacency, loops, mapping = _aggregate(adjacency, loops, community)
        membership = [mapping[node] for node in membership]
        if len(adjacency) == 1:
            break
    return Partition.from_labels(membership)
