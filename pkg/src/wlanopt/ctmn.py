"""Continuous-time Markov model of CSMA/CA channel access.

Global states are subsets of the currently active WLANs that may transmit
simultaneously (encoded as bitmasks over the active set, in scenario
order).  A state is feasible when no ordered pair inside it senses the
other.  Long-run throughput is the stationary-distribution-weighted sum of
per-state Shannon capacities.

Results for a (scenario, profile) pair are memoized; everything here is
pure and safe to evaluate concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

import numpy as np

from . import radio as _radio
from .scenario import Scenario, distance

# Mapping from WLAN id to its 1-based action number.  Keys define the
# currently active set.
JointProfile = Mapping[str, int]

STATIONARY_RESIDUAL_TOL = 1e-9
NEGATIVE_PROB_TOL = -1e-12


@dataclass(eq=False)
class CtmnModel:
    """Feasible states, generator matrix, and stationary distribution."""

    states: tuple[int, ...]
    generator: np.ndarray
    stationary: np.ndarray


def _active_items(scenario: Scenario, profile: JointProfile) -> tuple[tuple[str, int], ...]:
    """Profile as ((id, action_number), ...) in scenario order, validated."""
    ids = scenario.wlan_ids
    unknown = set(profile) - set(ids)
    if unknown:
        raise ValueError(f"profile names unknown WLANs: {sorted(unknown)}")
    k = len(scenario.action_space)
    for wlan_id, action in profile.items():
        if not 1 <= action <= k:
            raise ValueError(f"profile[{wlan_id!r}]: action {action} outside 1..{k}")
    return tuple((i, profile[i]) for i in ids if i in profile)


def _conflict_masks(scenario: Scenario, items: tuple[tuple[str, int], ...]) -> list[int]:
    """conflict[i] has bit j set when WLANs i and j sense each other in either direction."""
    wlans = [scenario.wlan(wlan_id) for wlan_id, _ in items]
    actions = [scenario.action(number) for _, number in items]
    n = len(items)
    masks = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if _radio.senses(wlans[i], actions[i], wlans[j], actions[j], scenario.radio) or _radio.senses(
                wlans[j], actions[j], wlans[i], actions[i], scenario.radio
            ):
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return masks


def enumerate_feasible_states(scenario: Scenario, profile: JointProfile) -> list[int]:
    """All transmit sets compatible with pairwise carrier sensing.

    Returned as bitmasks over the active WLANs in scenario order, ascending
    (the empty set first).  Feasibility is downward closed.
    """
    items = _active_items(scenario, profile)
    masks = _conflict_masks(scenario, items)
    n = len(items)
    states = []
    for s in range(1 << n):
        if all(not (s >> i) & 1 or not (masks[i] & s) for i in range(n)):
            states.append(s)
    return states


def build_generator(states: list[int], lam: float, mu: float) -> np.ndarray:
    """Transition-rate matrix: joins at rate lam (into feasible states), leaves at rate mu."""
    index = {s: i for i, s in enumerate(states)}
    n_bits = 0
    for s in states:
        n_bits = max(n_bits, s.bit_length())
    q = np.zeros((len(states), len(states)))
    for i, s in enumerate(states):
        for w in range(n_bits):
            bit = 1 << w
            if s & bit:
                q[i, index[s & ~bit]] += mu
            else:
                target = s | bit
                if target in index:
                    q[i, index[target]] += lam
        q[i, i] = -q[i].sum()
    return q


def stationary_distribution(q: np.ndarray) -> np.ndarray:
    """Solve pi Q = 0 with sum(pi) = 1 by a dense linear solve.

    One balance equation is replaced by the normalization constraint.
    Raises ValueError if the system is singular or the residual exceeds
    tolerance (both signal a malformed generator).
    """
    q = np.asarray(q, dtype=float)
    n = q.shape[0]
    a = q.T.copy()
    a[0, :] = 1.0
    b = np.zeros(n)
    b[0] = 1.0
    try:
        pi = np.linalg.solve(a, b)
    except np.linalg.LinAlgError as exc:
        raise ValueError(f"singular generator matrix: {exc}") from exc
    residual = float(np.max(np.abs(pi @ q))) if n else 0.0
    if residual > STATIONARY_RESIDUAL_TOL:
        raise ValueError(f"stationary solve residual {residual:g} exceeds {STATIONARY_RESIDUAL_TOL:g}")
    if float(pi.min()) < NEGATIVE_PROB_TOL:
        raise ValueError(f"stationary distribution has negative mass {pi.min():g}")
    pi = np.clip(pi, 0.0, None)
    if abs(float(pi.sum()) - 1.0) > STATIONARY_RESIDUAL_TOL:
        raise ValueError(f"stationary distribution sums to {float(pi.sum())!r}")
    return pi


def build_ctmn(scenario: Scenario, profile: JointProfile) -> CtmnModel:
    """Enumerate states, build the generator, and solve the stationary distribution."""
    states = enumerate_feasible_states(scenario, profile)
    q = build_generator(states, scenario.radio.lambda_access, scenario.radio.mu_departure)
    return CtmnModel(states=tuple(states), generator=q, stationary=stationary_distribution(q))


def _link_tables(scenario: Scenario, items: tuple[tuple[str, int], ...]):
    """Per-WLAN signal/noise/width and pairwise interference contributions in mW."""
    wlans = [scenario.wlan(wlan_id) for wlan_id, _ in items]
    actions = [scenario.action(number) for _, number in items]
    rp = scenario.radio
    n = len(items)
    signal = [
        _radio.rx_power_dbm(actions[i].tx_power_dbm, distance(wlans[i].ap, wlans[i].sta), rp)
        for i in range(n)
    ]
    noise = [_radio.noise_power_dbm(len(actions[i].range), rp) for i in range(n)]
    width = [actions[i].range.width_hz(rp.base_bandwidth_hz) for i in range(n)]
    # interference[i][j]: mW landing in i's band at i's STA while j transmits
    interference = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            ovl = _radio.overlap_factor(actions[j].range, actions[i].range)
            if ovl == 0.0:
                continue
            d = distance(wlans[j].ap, wlans[i].sta)
            interference[i][j] = _radio.mw_from_dbm(_radio.rx_power_dbm(actions[j].tx_power_dbm, d, rp)) * ovl
    return signal, noise, width, interference


def _state_capacities(
    scenario: Scenario,
    items: tuple[tuple[str, int], ...],
    state: int,
    tables=None,
) -> list[float]:
    signal, noise, width, interference = tables if tables is not None else _link_tables(scenario, items)
    caps = [0.0] * len(items)
    for i in range(len(items)):
        if not (state >> i) & 1:
            continue
        p_i = sum(interference[i][j] for j in range(len(items)) if j != i and (state >> j) & 1)
        sinr = _radio.sinr_linear(_radio.LinkBudget(signal[i], noise[i], p_i))
        caps[i] = _radio.shannon_capacity_bps(width[i], sinr, scenario.radio.spatial_streams)
    return caps


def per_state_capacity(scenario: Scenario, profile: JointProfile, state: int) -> dict[str, float]:
    """Shannon capacity of each WLAN while the given transmit set is on the air.

    WLANs that are silent in the state, or absent from the profile, get 0.
    """
    items = _active_items(scenario, profile)
    caps = _state_capacities(scenario, items, state)
    report = {wlan_id: 0.0 for wlan_id in scenario.wlan_ids}
    for (wlan_id, _), cap in zip(items, caps):
        report[wlan_id] = cap
    return report


@lru_cache(maxsize=None)
def _throughput_items(scenario: Scenario, items: tuple[tuple[str, int], ...]) -> tuple[float, ...]:
    profile = dict(items)
    model = build_ctmn(scenario, profile)
    tables = _link_tables(scenario, items)
    totals = [0.0] * len(items)
    for pi_s, state in zip(model.stationary.tolist(), model.states):
        caps = _state_capacities(scenario, items, state, tables)
        for i in range(len(items)):
            totals[i] += pi_s * caps[i]
    return tuple(totals)


def throughput(scenario: Scenario, profile: JointProfile) -> dict[str, float]:
    """Long-run throughput of every WLAN under a fixed joint action profile.

    WLANs absent from the profile (not yet activated) get 0.
    """
    items = _active_items(scenario, profile)
    totals = _throughput_items(scenario, items)
    report = {wlan_id: 0.0 for wlan_id in scenario.wlan_ids}
    for (wlan_id, _), total in zip(items, totals):
        report[wlan_id] = total
    return report


@lru_cache(maxsize=None)
def _standalone_caps_items(scenario: Scenario) -> tuple[float, ...]:
    return tuple(
        max(
            throughput(scenario, {wlan_id: k})[wlan_id]
            for k in range(1, len(scenario.action_space) + 1)
        )
        for wlan_id in scenario.wlan_ids
    )


def standalone_caps(scenario: Scenario) -> dict[str, float]:
    """Best achievable throughput of each WLAN when it is alone on the air."""
    return dict(zip(scenario.wlan_ids, _standalone_caps_items(scenario)))
