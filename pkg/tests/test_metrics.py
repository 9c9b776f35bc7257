# Copyright 2026 Isaacveg
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0

from __future__ import annotations

import itertools
import math
import random
import unittest

import numpy as np

from graph_fixtures import (
    complete_graph,
    floyd_warshall,
    make_graph,
    naive_betweenness,
    path_edges,
    path_graph,
    random_edges,
    random_graph,
    star_graph,
    two_triangles,
)

from graph_sampler.errors import GraphError
from graph_sampler.metrics import (
    average_clustering,
    average_degree,
    betweenness_centrality,
    connected_components,
    density,
    diameter_and_apl,
    distances_from,
    full_report,
    local_clustering,
    louvain_communities,
    modularity,
    triangle_counts,
)
from graph_sampler.models import Partition


class BasicMetricTests(unittest.TestCase):
    def test_average_degree_and_density(self) -> None:
        self.assertEqual(1.5, average_degree(path_graph(4)))
        self.assertEqual(1.0, density(complete_graph(4)))
        self.assertAlmostEqual(0.5, density(path_graph(4)))

    def test_degenerate_graphs_raise(self) -> None:
        with self.assertRaises(GraphError):
            density(make_graph(1, []))
        with self.assertRaises(GraphError):
            average_degree(make_graph(0, []))

    def test_clustering_of_triangle_and_star(self) -> None:
        self.assertEqual(1.0, average_clustering(complete_graph(3)))
        self.assertEqual(0.0, average_clustering(star_graph(5)))

    def test_low_degree_nodes_count_as_zero_in_the_average(self) -> None:
        # triangle plus a pendant: corners 0 and 1 are 1.0, node 2 is 1/3, node 3 is 0
        graph = make_graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])

        self.assertEqual([1, 1, 1, 0], triangle_counts(graph).tolist())
        self.assertAlmostEqual(1.0 / 3.0, float(local_clustering(graph)[2]))
        self.assertAlmostEqual((1.0 + 1.0 + 1.0 / 3.0) / 4.0, average_clustering(graph))

    def test_triangle_counts_match_brute_force(self) -> None:
        rng = random.Random(21)
        for _ in range(10):
            graph = random_graph(rng, 25, 0.3)
            expected = [0] * graph.node_count
            for a, b, c in itertools.combinations(range(graph.node_count), 3):
                if graph.has_edge(a, b) and graph.has_edge(b, c) and graph.has_edge(a, c):
                    expected[a] += 1
                    expected[b] += 1
                    expected[c] += 1
            self.assertEqual(expected, triangle_counts(graph).tolist())

    def test_connected_components(self) -> None:
        split = connected_components(two_triangles())
        self.assertEqual(2, split.count)
        self.assertEqual([0, 0, 0, 1, 1, 1], split.labels.tolist())
        self.assertEqual([0, 1, 2], split.largest.tolist())
        self.assertEqual(0.5, split.largest_fraction)

        isolated = connected_components(make_graph(5, []))
        self.assertEqual(5, isolated.count)


class PathMetricTests(unittest.TestCase):
    def test_distances_on_a_path(self) -> None:
        self.assertEqual([0.0, 1.0, 2.0], distances_from(path_graph(3), 0).tolist())

    def test_unreachable_nodes_are_infinite(self) -> None:
        distances = distances_from(two_triangles(), 0)

        self.assertTrue(all(math.isinf(value) for value in distances[3:]))

    def test_distances_match_floyd_warshall(self) -> None:
        rng = random.Random(60)
        for _ in range(200):
            n = rng.randint(2, 60)
            graph = random_graph(rng, n, rng.uniform(0.02, 0.2))
            expected = floyd_warshall(graph)
            for source in range(n):
                self.assertEqual(expected[source], distances_from(graph, source).tolist())

    def test_diameter_and_average_path_length(self) -> None:
        self.assertEqual((4, 2.0), diameter_and_apl(path_graph(5)))
        self.assertEqual((1, 1.0), diameter_and_apl(complete_graph(4)))

    def test_largest_component_is_used_when_disconnected(self) -> None:
        graph = make_graph(7, [(0, 1), (1, 2), (2, 3), (4, 5)])

        diameter, apl = diameter_and_apl(graph)

        self.assertEqual(3, diameter)
        self.assertAlmostEqual(20.0 / 12.0, apl)

    def test_diameter_needs_an_edge(self) -> None:
        with self.assertRaises(GraphError):
            diameter_and_apl(make_graph(3, []))

    def test_diameter_agrees_with_floyd_warshall(self) -> None:
        rng = random.Random(8)
        for _ in range(20):
            graph = random_graph(rng, 30, 0.15)
            largest = connected_components(graph).largest.tolist()
            if len(largest) < 2:
                continue
            dist = floyd_warshall(graph)
            pairs = [dist[u][v] for u in largest for v in largest if u != v]

            diameter, apl = diameter_and_apl(graph)

            self.assertEqual(int(max(pairs)), diameter)
            self.assertAlmostEqual(sum(pairs) / len(pairs), apl)

    def test_brandes_on_small_graphs(self) -> None:
        self.assertEqual([0.0, 1.0, 0.0], betweenness_centrality(path_graph(3)).tolist())
        self.assertEqual([0.0] * 4, betweenness_centrality(complete_graph(4)).tolist())
        self.assertEqual(10.0, float(betweenness_centrality(star_graph(5))[0]))

    def test_brandes_matches_naive_path_counting(self) -> None:
        rng = random.Random(30)
        for _ in range(100):
            n = rng.randint(2, 30)
            graph = random_graph(rng, n, rng.uniform(0.05, 0.4))

            scores = betweenness_centrality(graph)

            self.assertLessEqual(float(np.max(np.abs(scores - naive_betweenness(graph)))), 1e-9)

    def test_results_do_not_depend_on_worker_count(self) -> None:
        graph = random_graph(random.Random(44), 90, 0.08)

        self.assertEqual(diameter_and_apl(graph, workers=1), diameter_and_apl(graph, workers=2))
        self.assertEqual(
            betweenness_centrality(graph, workers=1).tolist(),
            betweenness_centrality(graph, workers=2).tolist(),
        )


class CommunityTests(unittest.TestCase):
    def test_modularity_closed_forms(self) -> None:
        graph = two_triangles()

        self.assertEqual(0.5, modularity(graph, Partition((0, 0, 0, 1, 1, 1))))
        self.assertEqual(0.0, modularity(graph, Partition((0,) * 6)))
        self.assertAlmostEqual(
            -1.0 / 3.0,
            modularity(complete_graph(3), Partition((0, 1, 2))),
        )

    def test_modularity_ignores_community_names(self) -> None:
        graph = random_graph(random.Random(3), 20, 0.2)
        rng = random.Random(4)
        labels = [rng.randrange(4) for _ in range(20)]
        renamed = [{0: 3, 1: 0, 2: 2, 3: 1}[label] for label in labels]

        self.assertAlmostEqual(
            modularity(graph, Partition(tuple(labels))),
            modularity(graph, Partition(tuple(renamed))),
        )

    def test_modularity_rejects_bad_input(self) -> None:
        with self.assertRaises(GraphError):
            modularity(two_triangles(), Partition((0, 0)))
        with self.assertRaises(GraphError):
            modularity(make_graph(2, []), Partition((0, 1)))

    def test_louvain_separates_two_triangles(self) -> None:
        partition = louvain_communities(two_triangles(), seed=1)

        self.assertEqual((0, 0, 0, 1, 1, 1), partition.community)
        self.assertEqual(0.5, modularity(two_triangles(), partition))

    def test_louvain_keeps_a_clique_together(self) -> None:
        partition = louvain_communities(complete_graph(4), seed=2)

        self.assertEqual(1, partition.community_count)

    def test_louvain_finds_the_optimum_of_a_small_graph(self) -> None:
        # two triangles bridged by one edge
        graph = make_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
        best = max(
            modularity(graph, Partition.from_labels(labels))
            for labels in itertools.product(range(3), repeat=6)
        )

        for seed in range(5):
            found = modularity(graph, louvain_communities(graph, seed))
            self.assertAlmostEqual(best, found)

    def test_louvain_modularity_is_never_negative(self) -> None:
        rng = random.Random(90)
        for seed in range(10):
            graph = random_graph(rng, 40, 0.1)
            if graph.edge_count == 0:
                continue
            self.assertGreaterEqual(modularity(graph, louvain_communities(graph, seed)), 0.0)

    def test_louvain_is_deterministic_per_seed(self) -> None:
        graph = random_graph(random.Random(17), 60, 0.08)

        self.assertEqual(louvain_communities(graph, 5), louvain_communities(graph, 5))


class FullReportTests(unittest.TestCase):
    def test_report_for_two_triangles(self) -> None:
        report = full_report(two_triangles(), seed=0)

        self.assertEqual(2, report.connected_components)
        self.assertEqual(1.0, report.avg_clustering)
        self.assertEqual(1, report.diameter)
        self.assertEqual(1.0, report.avg_path_length)
        self.assertEqual(0.5, report.modularity)
        self.assertEqual(2.0, report.avg_degree)
        self.assertEqual(0.5, report.largest_component_fraction)

    def test_adding_an_edge_never_lowers_degree_or_density(self) -> None:
        rng = random.Random(13)
        for _ in range(10):
            graph = random_graph(rng, 20, 0.15)
            missing = [
                pair for pair in itertools.combinations(range(20), 2)
                if not graph.has_edge(*pair)
            ]
            bigger = make_graph(20, graph.edge_pairs() + [rng.choice(missing)])

            self.assertGreater(average_degree(bigger), average_degree(graph))
            self.assertGreater(density(bigger), density(graph))
            self.assertLessEqual(
                connected_components(bigger).count,
                connected_components(graph).count,
            )

    def test_adding_an_edge_inside_a_component_never_lengthens_paths(self) -> None:
        rng = random.Random(19)
        for _ in range(60):
            n = rng.randint(5, 25)
            graph = make_graph(n, path_edges(n) + random_edges(rng, n, 0.05))
            missing = [
                pair for pair in itertools.combinations(range(n), 2)
                if not graph.has_edge(*pair)
            ]
            if not missing:
                continue
            bigger = make_graph(n, graph.edge_pairs() + [rng.choice(missing)])

            diameter, apl = diameter_and_apl(graph)
            new_diameter, new_apl = diameter_and_apl(bigger)

            self.assertLessEqual(new_diameter, diameter)
            self.assertLessEqual(new_apl, apl + 1e-12)

    def test_density_scaled_by_n_minus_one_is_the_average_degree(self) -> None:
        rng = random.Random(23)
        for _ in range(50):
            n = rng.randint(2, 40)
            graph = random_graph(rng, n, rng.uniform(0.0, 0.5))

            self.assertAlmostEqual(average_degree(graph), density(graph) * (n - 1), delta=1e-12)

    def test_report_requires_an_edge(self) -> None:
        with self.assertRaises(GraphError):
            full_report(make_graph(3, []), seed=0)
        with self.assertRaises(GraphError):
            full_report(make_graph(1, []), seed=0)


if __name__ == "__main__":
    unittest.main()
