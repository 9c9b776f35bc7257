# Copyright 2026 Isaacveg
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass
from typing import Any

from .export_utils import emit_csv, emit_json, emit_plot_series
from .models import SampleSpec, SweepResult


def safe_filename(title: str, fallback: str, *, max_length: int = 120) -> str:
    name = title.strip().replace(" ", "_")
    name = re.sub(r"[\\/:*?\"<>|]", "", name)
    name = re.sub(r"[^A-Za-z0-9._-]+", "_", name)
    name = re.sub(r"_+", "_", name).strip("._-")
    if not name:
        name = fallback
    if len(name) > max_length:
        name = name[:max_length].rstrip("._-")
    return name or fallback


def dataset_stem(path: str) -> str:
    base = os.path.basename(path)
    for suffix in (".gz", ".txt", ".edges", ".edgelist"):
        if base.endswith(suffix):
            base = base[: -len(suffix)]
    return safe_filename(base, "graph")


def default_sample_path(dataset_path: str, spec: SampleSpec) -> str:
    name = f"{dataset_stem(dataset_path)}_{spec.strategy.value}_{spec.target}_seed{spec.seed}"
    return f"{name}.txt"


def sidecar_path(edge_list_path: str) -> str:
    return f"{edge_list_path}.json"


def write_text_artifact(path: str, text: str) -> None:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(text)


def write_json_artifact(path: str, data: Any) -> None:
    write_text_artifact(path, json.dumps(data, indent=2) + "\n")


@dataclass(frozen=True)
class SweepLayout:
    root_dir: str
    plan_path: str
    results_json: str
    results_csv: str
    plots_dir: str

    @classmethod
    def under(cls, root_dir: str) -> "SweepLayout":
        return cls(
            root_dir=root_dir,
            plan_path=os.path.join(root_dir, "plan.json"),
            results_json=os.path.join(root_dir, "results.json"),
            results_csv=os.path.join(root_dir, "results.csv"),
            plots_dir=os.path.join(root_dir, "plots"),
        )


def write_sweep_outputs(result: SweepResult, root_dir: str) -> SweepLayout:
    layout = SweepLayout.under(root_dir)
    os.makedirs(layout.root_dir, exist_ok=True)
    write_json_artifact(layout.plan_path, result.plan.to_dict())
    with open(layout.results_json, "w", encoding="utf-8", newline="") as f:
        emit_json(result, f)
    with open(layout.results_csv, "w", encoding="utf-8", newline="") as f:
        emit_csv(result, f)
    emit_plot_series(result, layout.plots_dir)
    return layout
