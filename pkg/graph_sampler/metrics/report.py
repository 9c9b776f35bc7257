# Copyright 2026 Isaacveg
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0

from __future__ import annotations

from ..errors import GraphError
from ..graph import Graph
from ..models import PropertyReport
from .basic import average_clustering, average_degree, connected_components, density
from .community import louvain_communities, modularity
from .paths import diameter_and_apl


def full_report(graph: Graph, seed: int, *, workers: int = 1) -> PropertyReport:
    if graph.node_count < 2:
        raise GraphError(f"report needs at least 2 nodes, graph has {graph.node_count}")
    if graph.edge_count < 1:
        raise GraphError("report needs at least 1 edge")
    components = connected_components(graph)
    diameter, apl = diameter_and_apl(graph, workers=workers)
    return PropertyReport(
        avg_degree=average_degree(graph),
        density=density(graph),
        modularity=modularity(graph, louvain_communities(graph, seed)),
        avg_clustering=average_clustering(graph),
        diameter=diameter,
        avg_path_length=apl,
        connected_components=components.count,
        largest_component_fraction=components.largest_fraction,
    )
