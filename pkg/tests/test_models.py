# Copyright 2026 Isaacveg
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0

from __future__ import annotations

import unittest

from graph_sampler.errors import PlanError, SampleSpecError
from graph_sampler.models import (
    CellResult,
    ExperimentPlan,
    Partition,
    PropertyReport,
    SampleSpec,
    Strategy,
)


class SampleSpecTests(unittest.TestCase):
    def test_from_dict_fills_walk_defaults(self) -> None:
        spec = SampleSpec.from_dict({"strategy": "RW", "target": 100, "seed": 4})

        self.assertIs(Strategy.RW, spec.strategy)
        self.assertEqual(10000, spec.rw_iterations)
        self.assertEqual(10, spec.rw_runs)
        self.assertEqual(
            {"strategy": "rw", "target": 100, "rw_iterations": 10000, "rw_runs": 10, "seed": 4},
            spec.to_dict(),
        )

    def test_invalid_specs_are_rejected(self) -> None:
        with self.assertRaises(SampleSpecError):
            SampleSpec(strategy="snowball", target=5)
        with self.assertRaises(SampleSpecError):
            SampleSpec(strategy="ers", target=0)
        with self.assertRaises(SampleSpecError):
            SampleSpec(strategy="rw", target=5, rw_runs=0)
        with self.assertRaises(SampleSpecError):
            SampleSpec(strategy="nrs", target=5, seed=-1)
        with self.assertRaises(SampleSpecError):
            SampleSpec.from_dict({"strategy": "nrs"})


class ExperimentPlanTests(unittest.TestCase):
    def test_sizes_must_be_positive_and_increasing(self) -> None:
        with self.assertRaises(PlanError):
            ExperimentPlan(strategy="ers", sizes=())
        with self.assertRaises(PlanError):
            ExperimentPlan(strategy="ers", sizes=(10, 10))
        with self.assertRaises(PlanError):
            ExperimentPlan(strategy="ers", sizes=(0, 10))
        with self.assertRaises(PlanError):
            ExperimentPlan(strategy="walk", sizes=(10,))

    def test_overrides_skip_missing_values_and_reject_unknown_fields(self) -> None:
        plan = ExperimentPlan(strategy="nrs", sizes=(5, 10), master_seed=3)

        updated = plan.with_overrides(repetitions=2, master_seed=None)

        self.assertEqual(2, updated.repetitions)
        self.assertEqual(3, updated.master_seed)
        with self.assertRaises(PlanError):
            plan.with_overrides(colour="red")

    def test_plan_dict_round_trip(self) -> None:
        plan = ExperimentPlan(strategy="rw", sizes=[100, 500], repetitions=3, dataset_path="g.txt")

        self.assertEqual(plan, ExperimentPlan.from_dict(plan.to_dict()))


class ResultModelTests(unittest.TestCase):
    def test_failed_cell_row_leaves_properties_blank(self) -> None:
        cell = CellResult(Strategy.NRS, 10, 0, 5, node_count=10, error="walk impossible")

        row = cell.to_row()

        self.assertFalse(cell.ok)
        self.assertEqual("", row["diameter"])
        self.assertEqual("walk impossible", row["error"])
        self.assertIsNone(cell.value("diameter"))
        self.assertEqual(10.0, cell.value("node_count"))

    def test_report_from_dict_requires_every_property(self) -> None:
        with self.assertRaises(ValueError):
            PropertyReport.from_dict({"avg_degree": 1.0})

    def test_partition_labels_are_densified(self) -> None:
        partition = Partition.from_labels(["b", "a", "b", "c"])

        self.assertEqual((0, 1, 0, 2), partition.community)
        self.assertEqual(3, partition.community_count)
        self.assertEqual(4, len(partition))


if __name__ == "__main__":
    unittest.main()
