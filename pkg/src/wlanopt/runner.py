"""Experiment orchestration: iterated select -> simulate -> reward -> update loops.

A run is fully deterministic given its master seed.  Seeds execute
independently; records are emitted in ascending seed order so output bytes
never depend on execution order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Mapping, Sequence

import numpy as np

from . import ctmn
from .bandits import AgentState, Policy, ThompsonSampling, agent_stream, select, shared_reward
from .scenario import Scenario

CSV_SCHEMA_LINE = "#schema=1"
CSV_COLUMNS = ("seed", "iteration", "wlan", "action", "throughput_bps", "reward", "min_throughput_bps")
DEFAULT_SEED_COUNT = 100
DEFAULT_WINDOW = 100
DEFAULT_ITERATIONS = {"overlap2": 500, "line3": 500, "grid4": 1000}


@dataclass(frozen=True)
class RunRecord:
    """One (seed, iteration, active WLAN) log row."""

    seed: int
    iteration: int
    wlan: str
    action: int
    throughput_bps: float
    reward: float
    min_throughput_bps: float


@dataclass
class ExperimentConfig:
    scenario: Scenario
    iterations: int
    seeds: tuple[int, ...] = tuple(range(DEFAULT_SEED_COUNT))
    policies: Policy | Mapping[str, Policy] = field(default_factory=ThompsonSampling)
    out_path: Path | None = None
    out_format: str = "csv"

    def __post_init__(self):
        if self.iterations < 1:
            raise ValueError(f"iterations must be >= 1, got {self.iterations}")
        self.seeds = tuple(self.seeds)
        if not self.seeds:
            raise ValueError("at least one master seed is required")
        if any(s < 0 for s in self.seeds):
            raise ValueError("master seeds must be non-negative")
        if len(set(self.seeds)) != len(self.seeds):
            raise ValueError("master seeds must be distinct")
        if self.out_format not in ("csv", "json"):
            raise ValueError(f"out_format must be 'csv' or 'json', got {self.out_format!r}")

    def policy_for(self, wlan_id: str) -> Policy:
        if isinstance(self.policies, Mapping):
            return self.policies[wlan_id]
        return self.policies


def run_single(
    scenario: Scenario,
    config: ExperimentConfig,
    master_seed: int,
    on_iteration: Callable[[int, list[str], dict[str, AgentState]], None] | None = None,
) -> list[RunRecord]:
    """One seeded run of the iterated learning loop.

    Per iteration t = 1..T: WLANs whose activation_iteration equals t join
    and, if any joined, every agent's knowledge is discarded; each active
    agent selects an arm; the airtime model yields per-WLAN throughput; one
    shared reward is computed; every active agent updates its chosen arm.
    ``on_iteration`` (if given) fires after the activation/reset step,
    before selection.
    """
    k = len(scenario.action_space)
    agents = {
        w.id: AgentState(k, agent_stream(master_seed, i)) for i, w in enumerate(scenario.wlans)
    }
    caps = ctmn.standalone_caps(scenario)
    records: list[RunRecord] = []
    for t in range(1, config.iterations + 1):
        if any(w.activation_iteration == t for w in scenario.wlans):
            for agent in agents.values():
                agent.reset()
        active = [w for w in scenario.wlans if w.activation_iteration <= t]
        if on_iteration is not None:
            on_iteration(t, [w.id for w in active], agents)
        if not active:
            continue
        profile = {w.id: select(config.policy_for(w.id), agents[w.id]) for w in active}
        report = ctmn.throughput(scenario, profile)
        active_ids = [w.id for w in active]
        reward = shared_reward(report, caps, active_ids)
        min_thr = min(report[wlan_id] for wlan_id in active_ids)
        for w in active:
            agents[w.id].update(profile[w.id], reward)
        for w in active:
            records.append(
                RunRecord(
                    seed=master_seed,
                    iteration=t,
                    wlan=w.id,
                    action=profile[w.id],
                    throughput_bps=report[w.id],
                    reward=reward,
                    min_throughput_bps=min_thr,
                )
            )
    return records


def write_records_csv(records: Sequence[RunRecord], path) -> None:
    lines = [CSV_SCHEMA_LINE, ",".join(CSV_COLUMNS)]
    for r in records:
        lines.append(
            f"{r.seed},{r.iteration},{r.wlan},{r.action},"
            f"{r.throughput_bps!r},{r.reward!r},{r.min_throughput_bps!r}"
        )
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def write_records_json(records: Sequence[RunRecord], path) -> None:
    payload = {
        "schema": 1,
        "records": [
            {
                "seed": r.seed,
                "iteration": r.iteration,
                "wlan": r.wlan,
                "action": r.action,
                "throughput_bps": r.throughput_bps,
                "reward": r.reward,
                "min_throughput_bps": r.min_throughput_bps,
            }
            for r in records
        ],
    }
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(payload, fh, indent=None, separators=(",", ":"))
        fh.write("\n")


def summarize(
    records: Sequence[RunRecord],
    iterations: int,
    n_actions: int,
    window: int = DEFAULT_WINDOW,
) -> dict:
    """Cross-seed summary: min-throughput evolution and final action frequencies.

    Evolution: per iteration, mean and 25/50/75th percentiles of the
    min-throughput across seeds.  Frequencies: per WLAN, share of each of
    the ``n_actions`` actions over the final ``window`` iterations, pooled
    across seeds.
    """
    window = min(window, iterations)
    per_iter: dict[int, dict[int, float]] = {}
    for r in records:
        per_iter.setdefault(r.iteration, {})[r.seed] = r.min_throughput_bps
    evolution = []
    for t in sorted(per_iter):
        values = np.array([per_iter[t][s] for s in sorted(per_iter[t])])
        evolution.append(
            {
                "iteration": t,
                "mean": float(values.mean()),
                "p25": float(np.percentile(values, 25)),
                "p50": float(np.percentile(values, 50)),
                "p75": float(np.percentile(values, 75)),
            }
        )
    counts: dict[str, dict[int, int]] = {}
    first_window_iter = iterations - window + 1
    for r in records:
        if r.iteration < first_window_iter:
            continue
        by_action = counts.setdefault(r.wlan, {})
        by_action[r.action] = by_action.get(r.action, 0) + 1
    frequencies = {}
    for wlan in sorted(counts):
        total = sum(counts[wlan].values())
        frequencies[wlan] = {
            str(action): counts[wlan].get(action, 0) / total for action in range(1, n_actions + 1)
        }
    return {
        "schema": 1,
        "iterations": iterations,
        "window": window,
        "min_throughput_evolution": evolution,
        "action_frequencies": frequencies,
    }


def summary_path(out_path: Path) -> Path:
    return out_path.with_name(out_path.stem + "_summary.json")


def run_experiment(config: ExperimentConfig) -> dict:
    """Run every seed, write the records file and the JSON summary, return the summary."""
    records: list[RunRecord] = []
    for seed in sorted(config.seeds):
        records.extend(run_single(config.scenario, config, seed))
    summary = summarize(records, config.iterations, len(config.scenario.action_space))
    summary["seeds"] = len(config.seeds)
    if config.out_path is not None:
        out = Path(config.out_path)
        if config.out_format == "csv":
            write_records_csv(records, out)
        else:
            write_records_json(records, out)
        with open(summary_path(out), "w", encoding="utf-8", newline="\n") as fh:
            json.dump(summary, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return summary
