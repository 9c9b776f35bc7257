# Copyright 2026 Isaacveg
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0

from __future__ import annotations

import csv
import io
import os
import tempfile
import unittest

import numpy as np

from graph_fixtures import two_triangles

from graph_sampler.experiment import baseline_report, comparative_table, run_sweep
from graph_sampler.export_utils import (
    CSV_FIELDS,
    PLOT_PANELS,
    emit_betweenness_csv,
    emit_csv,
    emit_json,
    emit_partition_csv,
    emit_plot_series,
    emit_summary_markdown,
    load_sweep_json,
)
from graph_sampler.graph import Graph
from graph_sampler.models import ExperimentPlan, Partition


class ExportUtilsTests(unittest.TestCase):
    def setUp(self) -> None:
        self.graph = two_triangles()
        self.result = run_sweep(
            ExperimentPlan(strategy="ers", sizes=(3, 6), repetitions=2, master_seed=1),
            self.graph,
        )

    def test_csv_has_one_row_per_cell(self) -> None:
        stream = io.StringIO()

        emit_csv(self.result, stream)

        lines = stream.getvalue().split("\n")
        self.assertEqual(",".join(CSV_FIELDS), lines[0])
        rows = list(csv.DictReader(io.StringIO(stream.getvalue())))
        self.assertEqual(4, len(rows))
        self.assertEqual(["3", "3", "6", "6"], [row["size"] for row in rows])
        self.assertEqual("ers", rows[0]["strategy"])

    def test_json_reloads_into_the_same_result(self) -> None:
        stream = io.StringIO()

        emit_json(self.result, stream)
        reloaded = load_sweep_json(io.StringIO(stream.getvalue()))

        self.assertTrue(stream.getvalue().endswith("}\n"))
        self.assertEqual(self.result.to_dict(), reloaded.to_dict())
        self.assertEqual(sorted(self.result.aggregates), sorted(reloaded.aggregates))

    def test_plot_series_writes_one_file_per_panel(self) -> None:
        with tempfile.TemporaryDirectory() as temp_dir:
            paths = emit_plot_series([self.result], temp_dir)

            self.assertEqual(8, len(paths))
            self.assertEqual(
                sorted(f"{panel}.csv" for panel in PLOT_PANELS),
                sorted(os.listdir(temp_dir)),
            )
            with open(os.path.join(temp_dir, "sample_size.csv"), "r", encoding="utf-8") as f:
                sizes = list(csv.reader(f))
            with open(os.path.join(temp_dir, "diameter.csv"), "r", encoding="utf-8") as f:
                diameters = list(csv.reader(f))

        self.assertEqual(["strategy", "size", "nodes_mean", "nodes_sd", "edges_mean", "edges_sd"], sizes[0])
        self.assertEqual(["ers", "6", "6.0", "0.0", "6.0", "0.0"], sizes[2])
        self.assertEqual(["strategy", "size", "mean", "sd", "min", "max"], diameters[0])
        self.assertEqual(3, len(diameters))

    def test_partition_and_betweenness_use_original_labels(self) -> None:
        graph = Graph([30, 10, 20], [(0, 1), (1, 2)])
        partition_stream = io.StringIO()
        scores_stream = io.StringIO()

        emit_partition_csv(graph, Partition((0, 0, 1)), partition_stream)
        emit_betweenness_csv(graph, np.array([0.0, 1.0, 0.0]), scores_stream)

        self.assertEqual(
            "node_label,community_id\n30,0\n10,0\n20,1\n",
            partition_stream.getvalue(),
        )
        self.assertEqual(
            "node_label,betweenness\n30,0.0\n10,1.0\n20,0.0\n",
            scores_stream.getvalue(),
        )

    def test_summary_markdown_lists_every_compared_property(self) -> None:
        table = comparative_table([self.result], baseline_report(self.graph, 1))
        stream = io.StringIO()

        emit_summary_markdown(table, stream)

        lines = stream.getvalue().splitlines()
        self.assertEqual("| Property | Baseline | ERS gap @ 6 | Closest |", lines[0])
        self.assertEqual(19, len(lines))
        self.assertTrue(lines[2].startswith("| Average degree | 2 | 0 | ERS"))
        self.assertEqual("", lines[9])
        self.assertEqual("| Property | Baseline | ERS predicted @ 6 |", lines[10])
        self.assertTrue(lines[12].startswith("| Average degree | 2 | 2 (linear, gap "))


if __name__ == "__main__":
    unittest.main()
