# Copyright 2026 Isaacveg
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0

from __future__ import annotations

import json
import os
import tempfile
import unittest

from graph_fixtures import two_triangles

from graph_sampler.artifacts import (
    dataset_stem,
    default_sample_path,
    safe_filename,
    sidecar_path,
    write_json_artifact,
    write_sweep_outputs,
)
from graph_sampler.experiment import run_sweep
from graph_sampler.models import ExperimentPlan, SampleSpec


class ArtifactTests(unittest.TestCase):
    def test_safe_filename_removes_unsafe_characters_and_compacts_spaces(self) -> None:
        self.assertEqual(
            "A_Graph_Sample_v2",
            safe_filename(' A Graph: "Sample" / v2? ', "fallback"),
        )

    def test_safe_filename_uses_fallback_when_title_has_no_safe_characters(self) -> None:
        self.assertEqual("graph", safe_filename("$$$   ", "graph"))

    def test_default_sample_path_names_strategy_target_and_seed(self) -> None:
        spec = SampleSpec(strategy="rw", target=100, seed=3)

        self.assertEqual("facebook_combined", dataset_stem("data/facebook_combined.txt.gz"))
        self.assertEqual(
            "facebook_combined_rw_100_seed3.txt",
            default_sample_path("data/facebook_combined.txt.gz", spec),
        )
        self.assertEqual("out/s.txt.json", sidecar_path("out/s.txt"))

    def test_json_artifact_creates_parent_directories(self) -> None:
        with tempfile.TemporaryDirectory() as temp_dir:
            path = os.path.join(temp_dir, "a", "b.json")

            write_json_artifact(path, {"seed": 1})

            with open(path, "r", encoding="utf-8") as f:
                self.assertEqual({"seed": 1}, json.load(f))

    def test_sweep_outputs_are_laid_out_under_root(self) -> None:
        plan = ExperimentPlan(strategy="nrs", sizes=(4, 6), repetitions=2)
        result = run_sweep(plan, two_triangles())
        with tempfile.TemporaryDirectory() as temp_dir:
            layout = write_sweep_outputs(result, os.path.join(temp_dir, "sweep"))

            self.assertTrue(os.path.exists(layout.plan_path))
            self.assertTrue(os.path.exists(layout.results_json))
            self.assertTrue(os.path.exists(layout.results_csv))
            self.assertEqual(8, len(os.listdir(layout.plots_dir)))
            with open(layout.plan_path, "r", encoding="utf-8") as f:
                self.assertEqual(plan.to_dict(), json.load(f))


if __name__ == "__main__":
    unittest.main()
