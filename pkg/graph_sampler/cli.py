# Copyright 2026 Isaacveg
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Callable, Dict, Optional, Sequence

from .artifacts import (
    default_sample_path,
    sidecar_path,
    write_json_artifact,
    write_sweep_outputs,
)
from .errors import EdgeListParseError, GraphError, PlanError, SampleSpecError
from .experiment import (
    DEFAULT_REPETITIONS,
    DEFAULT_RW_ITERATIONS,
    DEFAULT_RW_RUNS,
    baseline_report,
    default_plan,
    replicate,
    run_sweep,
)
from .export_utils import (
    emit_betweenness_csv,
    emit_partition_csv,
    emit_plot_series,
    emit_summary_markdown,
)
from .graph import load_edge_list, save_edge_list
from .metrics import betweenness_centrality, louvain_communities
from .models import ExperimentPlan, SampleSpec, Strategy
from .sampling import draw_sample, sample_graph_summary
from .seeding import LOUVAIN_STREAM, derive_seed
from .storage import CellStorage
from .workers import cancel_on_interrupt, default_workers

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INVALID = 2
EXIT_IO = 3

# Betweenness above this many nodes triggers a runtime warning.
BETWEENNESS_WARN_NODES = 2000

logger = logging.getLogger("graph_sampler")


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    parser.add_argument(
        "--workers",
        type=int,
        default=None,
        help="parallel worker processes (default: available CPUs)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphsampler",
        description="Sample large graphs and track how their properties evolve with sample size.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    sample = sub.add_parser("sample", help="draw one sample and write it as an edge list")
    sample.add_argument("dataset", help="SNAP edge list (plain or .gz)")
    sample.add_argument("--spec", help="JSON sample spec; flags override its fields")
    sample.add_argument("--strategy", choices=[s.value for s in Strategy])
    sample.add_argument("--target", type=int, help="edges for ers, nodes for nrs and rw")
    sample.add_argument("--seed", type=int)
    sample.add_argument("--rw-iterations", type=int)
    sample.add_argument("--rw-runs", type=int)
    sample.add_argument("-o", "--output", help="edge list path (sidecar JSON is written next to it)")
    _add_common(sample)

    metrics = sub.add_parser("metrics", help="print the property report of a graph")
    metrics.add_argument("dataset", help="SNAP edge list (plain or .gz)")
    metrics.add_argument("--seed", type=int, default=0, help="Louvain ordering seed")
    metrics.add_argument("-o", "--output", help="also write the report JSON here")
    metrics.add_argument("--partition", help="write the Louvain partition CSV here")
    metrics.add_argument("--betweenness", help="write per-node betweenness CSV here (slow)")
    _add_common(metrics)

    experiment = sub.add_parser("experiment", help="run one sampling sweep")
    experiment.add_argument("dataset", nargs="?", help="SNAP edge list; defaults to the plan's dataset_path")
    experiment.add_argument("--plan", help="JSON plan file; flags override its fields")
    experiment.add_argument("--strategy", choices=[s.value for s in Strategy])
    experiment.add_argument("--sizes", type=int, nargs="+")
    experiment.add_argument("--repetitions", type=int)
    experiment.add_argument("--rw-iterations", type=int)
    experiment.add_argument("--rw-runs", type=int)
    experiment.add_argument("--seed", type=int, help="master seed")
    experiment.add_argument("-o", "--output", help="output directory (default: sweep-<strategy>)")
    _add_common(experiment)

    rep = sub.add_parser("replicate", help="baseline plus all three default sweeps and their comparison")
    rep.add_argument("dataset", help="SNAP edge list (plain or .gz)")
    rep.add_argument("--seed", type=int, default=0, help="master seed")
    rep.add_argument("--repetitions", type=int, default=DEFAULT_REPETITIONS)
    for strategy in Strategy:
        rep.add_argument(
            f"--{strategy.value}-sizes",
            type=int,
            nargs="+",
            help=f"{strategy.label} sample sizes (default: the published schedule)",
        )
    rep.add_argument("--rw-iterations", type=int, default=DEFAULT_RW_ITERATIONS)
    rep.add_argument("--rw-runs", type=int, default=DEFAULT_RW_RUNS)
    rep.add_argument(
        "--speedup-sample",
        type=int,
        default=0,
        help="also time betweenness on a random-walk sample of this many nodes",
    )
    rep.add_argument("-o", "--output", default="replication", help="output directory")
    _add_common(rep)
    return parser


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def _workers(args: argparse.Namespace) -> int:
    if args.workers is None:
        return default_workers()
    if args.workers < 1:
        raise SampleSpecError("--workers must be at least 1")
    return args.workers


def _read_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as f:
        try:
            data = json.load(f)
        except ValueError as exc:
            raise SampleSpecError(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise SampleSpecError(f"{path} does not hold a JSON object")
    return data


def sample_spec_from_args(args: argparse.Namespace) -> SampleSpec:
    data: Dict[str, object] = _read_json(args.spec) if args.spec else {}
    overrides = {
        "strategy": args.strategy,
        "target": args.target,
        "seed": args.seed,
        "rw_iterations": args.rw_iterations,
        "rw_runs": args.rw_runs,
    }
    data.update({key: value for key, value in overrides.items() if value is not None})
    return SampleSpec.from_dict(data)


def plan_from_args(args: argparse.Namespace) -> ExperimentPlan:
    data: Dict[str, object] = {}
    if args.plan:
        try:
            data = _read_json(args.plan)
        except SampleSpecError as exc:
            raise PlanError(str(exc)) from None
    if args.strategy and "sizes" not in data and not args.sizes:
        plan = default_plan(Strategy.parse(args.strategy))
        data = {**plan.to_dict(), **data}
    overrides = {
        "strategy": args.strategy,
        "sizes": args.sizes,
        "repetitions": args.repetitions,
        "rw_iterations": args.rw_iterations,
        "rw_runs": args.rw_runs,
        "master_seed": args.seed,
        "dataset_path": args.dataset,
    }
    data.update({key: value for key, value in overrides.items() if value is not None})
    plan = ExperimentPlan.from_dict(data)
    if not plan.dataset_path:
        raise PlanError("No dataset given: pass a dataset path or set dataset_path in the plan")
    return plan


def cmd_sample(args: argparse.Namespace) -> int:
    spec = sample_spec_from_args(args)
    workers = _workers(args)
    graph, stats = load_edge_list(args.dataset)
    sample = draw_sample(graph, spec, workers=workers)
    output = args.output or default_sample_path(args.dataset, spec)
    save_edge_list(sample, output, comment=f"sample of {os.path.basename(args.dataset)}")
    write_json_artifact(
        sidecar_path(output),
        {
            "spec": spec.to_dict(),
            "source": {"path": args.dataset, **stats.to_dict()},
            "sample": sample_graph_summary(sample),
        },
    )
    print(
        f"{spec.strategy.label} sample: nodes={sample.node_count} edges={sample.edge_count} "
        f"seed={spec.seed} -> {output}"
    )
    return EXIT_OK


def cmd_metrics(args: argparse.Namespace) -> int:
    workers = _workers(args)
    graph, stats = load_edge_list(args.dataset)
    logger.info("loaded %s", json.dumps(stats.to_dict()))
    louvain_seed = derive_seed(args.seed, LOUVAIN_STREAM)
    report = baseline_report(graph, args.seed, workers=workers)
    payload = {**report.to_dict(), "seed": args.seed}
    print(json.dumps(payload, indent=2))
    if args.output:
        write_json_artifact(args.output, payload)
    if args.partition:
        partition = louvain_communities(graph, louvain_seed)
        with open(args.partition, "w", encoding="utf-8", newline="") as f:
            emit_partition_csv(graph, partition, f)
    if args.betweenness:
        if graph.node_count > BETWEENNESS_WARN_NODES:
            logger.warning(
                "betweenness on %d nodes is O(|N||E|) and may take a long time",
                graph.node_count,
            )
        scores = betweenness_centrality(graph, workers=workers)
        with open(args.betweenness, "w", encoding="utf-8", newline="") as f:
            emit_betweenness_csv(graph, scores, f)
    return EXIT_OK


def cmd_experiment(args: argparse.Namespace) -> int:
    if not args.plan and not args.strategy:
        raise PlanError("Pass --strategy or --plan")
    plan = plan_from_args(args)
    workers = _workers(args)
    graph, _ = load_edge_list(plan.dataset_path)
    output = args.output or f"sweep-{plan.strategy.value}"
    with cancel_on_interrupt() as token:
        result = run_sweep(
            plan,
            graph,
            storage=CellStorage(output),
            workers=workers,
            cancelled=token.cancelled,
            log=logger.info,
        )
    layout = write_sweep_outputs(result, output)
    failed = len(result.failures)
    print(
        f"{plan.strategy.label} sweep: {len(result.cells)} cells, {failed} failed, "
        f"{result.skipped} reused, master seed {plan.master_seed} -> {layout.root_dir}"
    )
    if result.cancelled:
        print("cancelled: rerun the same command to resume")
    if result.cells and failed == len(result.cells):
        return EXIT_PARSE
    return EXIT_OK


def cmd_replicate(args: argparse.Namespace) -> int:
    workers = _workers(args)
    if args.repetitions < 1:
        raise PlanError("--repetitions must be at least 1")
    if args.speedup_sample < 0:
        raise SampleSpecError("--speedup-sample must not be negative")
    if args.rw_iterations < 1 or args.rw_runs < 1:
        raise PlanError("--rw-iterations and --rw-runs must be at least 1")
    sizes = {
        strategy: getattr(args, f"{strategy.value}_sizes")
        for strategy in Strategy
        if getattr(args, f"{strategy.value}_sizes")
    }
    graph, stats = load_edge_list(args.dataset)
    with cancel_on_interrupt() as token:
        outcome = replicate(
            graph,
            master_seed=args.seed,
            dataset_path=args.dataset,
            repetitions=args.repetitions,
            sizes=sizes,
            rw_iterations=args.rw_iterations,
            rw_runs=args.rw_runs,
            output_dir=args.output,
            speedup_sample=args.speedup_sample,
            workers=workers,
            cancelled=token.cancelled,
            log=logger.info,
        )
    write_json_artifact(
        os.path.join(args.output, "baseline.json"),
        {"load": stats.to_dict(), "report": outcome.baseline.to_dict(), "master_seed": args.seed},
    )
    for sweep in outcome.sweeps:
        write_sweep_outputs(sweep, os.path.join(args.output, sweep.strategy.value))
    emit_plot_series(outcome.sweeps, os.path.join(args.output, "plots"))
    comparison = outcome.table.to_dict()
    comparison["trend_checks"] = [
        {"property": c.property, "favoured": c.favoured, "held": c.held, "gaps": c.gaps}
        for c in outcome.checks
    ]
    comparison["recommendations"] = {
        name: strategy.value for name, strategy in outcome.recommendations.items()
    }
    if outcome.speedup:
        comparison["betweenness_speedup"] = outcome.speedup.to_dict()
    write_json_artifact(os.path.join(args.output, "comparison.json"), comparison)
    with open(os.path.join(args.output, "summary.md"), "w", encoding="utf-8", newline="") as f:
        emit_summary_markdown(outcome.table, f)

    cells = [cell for sweep in outcome.sweeps for cell in sweep.cells]
    failed = sum(1 for cell in cells if cell.error)
    print(f"replicated {len(outcome.sweeps)} sweeps ({len(cells)} cells, {failed} failed) -> {args.output}")
    for check in outcome.checks:
        print(f"  {check.property}: favoured {check.favoured}, {'held' if check.held else 'not held'}")
    if any(sweep.cancelled for sweep in outcome.sweeps):
        print("cancelled: rerun the same command to resume")
    if cells and failed == len(cells):
        return EXIT_PARSE
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "sample": cmd_sample,
    "metrics": cmd_metrics,
    "experiment": cmd_experiment,
    "replicate": cmd_replicate,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(list(argv) if argv is not None else None)
    configure_logging(args.verbose)
    try:
        return COMMANDS[args.subcommand](args)
    except EdgeListParseError as exc:
        _report_error(exc)
        return EXIT_PARSE
    except (SampleSpecError, PlanError) as exc:
        _report_error(exc)
        return EXIT_INVALID
    except GraphError as exc:
        _report_error(exc)
        return EXIT_PARSE
    except OSError as exc:
        _report_error(exc)
        return EXIT_IO


def _report_error(exc: BaseException) -> None:
    print(f"error: {exc}", file=sys.stderr)
