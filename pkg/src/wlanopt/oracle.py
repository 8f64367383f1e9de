"""Exhaustive ground truth: sweep all K^N joint profiles and report the max-min optimum.

Profiles are evaluated in lexicographic order over the active WLANs (scenario
order), so repeated calls are byte-identical.  Results are memoized per
(scenario, active set) within the process.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from . import ctmn
from .scenario import Scenario

MAX_PROFILES = 10**7

# Mirror-symmetric optima can differ in the last ulp through the dense
# stationary solve; ties are collected within this relative slack.
TIE_REL_TOL = 1e-9


@dataclass(eq=False)
class OracleResult:
    """Max-min sweep outcome over one active set."""

    active_ids: tuple[str, ...]
    best_profiles: tuple[tuple[int, ...], ...]
    best_minmax: float
    table: dict[tuple[int, ...], dict[str, float]]

    def min_throughput(self, profile: tuple[int, ...]) -> float:
        report = self.table[profile]
        return min(report[wlan_id] for wlan_id in self.active_ids)


def _resolve_active(scenario: Scenario, active_ids) -> tuple[str, ...]:
    if active_ids is None:
        return scenario.wlan_ids
    wanted = set(active_ids)
    unknown = wanted - set(scenario.wlan_ids)
    if unknown:
        raise ValueError(f"unknown WLAN ids: {sorted(unknown)}")
    resolved = tuple(wlan_id for wlan_id in scenario.wlan_ids if wlan_id in wanted)
    if not resolved:
        raise ValueError("active set must contain at least one WLAN")
    return resolved


@lru_cache(maxsize=None)
def _exhaustive_cached(scenario: Scenario, active: tuple[str, ...]) -> OracleResult:
    k = len(scenario.action_space)
    n_profiles = k ** len(active)
    if n_profiles > MAX_PROFILES:
        raise ValueError(f"{k}^{len(active)} = {n_profiles} profiles exceeds the {MAX_PROFILES} guard")
    table: dict[tuple[int, ...], dict[str, float]] = {}
    mins: dict[tuple[int, ...], float] = {}
    for profile in itertools.product(range(1, k + 1), repeat=len(active)):
        report = ctmn.throughput(scenario, dict(zip(active, profile)))
        table[profile] = report
        mins[profile] = min(report[wlan_id] for wlan_id in active)
    best = max(mins.values())
    ties = tuple(p for p in table if best - mins[p] <= TIE_REL_TOL * best)
    return OracleResult(active_ids=active, best_profiles=ties, best_minmax=best, table=table)


def exhaustive_maxmin(scenario: Scenario, active_ids: Iterable[str] | None = None) -> OracleResult:
    """Evaluate every joint profile over the active WLANs; return all max-min optima."""
    return _exhaustive_cached(scenario, _resolve_active(scenario, active_ids))


def profile_report(scenario: Scenario, profile: ctmn.JointProfile) -> dict[str, float]:
    """Per-WLAN throughput of one joint profile (pass-through to the airtime model)."""
    return ctmn.throughput(scenario, profile)


def write_profile_table_csv(result: OracleResult, path) -> None:
    """Emit the full per-profile table as CSV.

    Columns: one action per active WLAN, one throughput per active WLAN,
    then the minimum throughput.  First line is the schema marker.
    """
    ids = result.active_ids
    header = (
        [f"action_{wlan_id}" for wlan_id in ids]
        + [f"throughput_{wlan_id}_bps" for wlan_id in ids]
        + ["min_throughput_bps"]
    )
    lines = ["#schema=1", ",".join(header)]
    for profile, report in result.table.items():
        row = [str(a) for a in profile]
        row += [repr(report[wlan_id]) for wlan_id in ids]
        row.append(repr(min(report[wlan_id] for wlan_id in ids)))
        lines.append(",".join(row))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
