# Copyright 2026 Isaacveg
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0

from .basic import (
    ComponentSummary,
    average_clustering,
    average_degree,
    connected_components,
    density,
    local_clustering,
    triangle_counts,
)
from .community import GAIN_THRESHOLD, louvain_communities, modularity
from .paths import betweenness_centrality, diameter_and_apl, distances_from
from .report import full_report

__all__ = [
    "ComponentSummary",
    "GAIN_THRESHOLD",
    "average_clustering",
    "average_degree",
    "betweenness_centrality",
    "connected_components",
    "density",
    "diameter_and_apl",
    "distances_from",
    "full_report",
    "local_clustering",
    "louvain_communities",
    "modularity",
    "triangle_counts",
]
