"""Thompson sampling over joint power/channel actions, with a shared max-min reward.

Each WLAN runs an independent agent: per-arm mean-reward estimates r_hat and
play counts n.  An arm is drawn by sampling theta_k ~ Normal(r_hat_k,
1/(n_k+1)) for every arm and playing the argmax.  The update is the biased
recurrence r_hat <- (r_hat*n + reward)/(n + 2), n <- n + 1, kept verbatim.

Agents are single-owner mutable.  Advance different WLANs' agents
concurrently only if the iteration barrier (all select, one shared reward,
all update) is preserved.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Union

import numpy as np


def posterior_variance(n):
    """Sampling variance used for an arm played n times: 1/(n+1)."""
    return 1.0 / (np.asarray(n) + 1.0)


def argmax_lowest(values) -> int:
    """Index of the maximum, ties broken by lowest index (0-based)."""
    return int(np.argmax(values))


def agent_stream(master_seed: int, wlan_index: int) -> np.random.Generator:
    """Deterministic per-(run, WLAN) random stream.

    The stream seed is SeedSequence((master_seed, wlan_index)), so every
    (seed, WLAN) pair gets an independent, platform-stable stream.
    """
    return np.random.default_rng(np.random.SeedSequence((master_seed, wlan_index)))


class AgentState:
    """Per-WLAN bandit state over K arms (arm numbers are 1-based)."""

    def __init__(self, n_arms: int, rng: np.random.Generator):
        if n_arms < 1:
            raise ValueError(f"n_arms must be >= 1, got {n_arms}")
        self.n_arms = n_arms
        self.r_hat = np.zeros(n_arms)
        self.n = np.zeros(n_arms, dtype=np.int64)
        self.rng = rng

    def sample_arm(self) -> int:
        """Draw theta for every arm in order and return the 1-based argmax.

        Consumes exactly n_arms standard-normal draws from the stream.
        """
        z = self.rng.standard_normal(self.n_arms)
        theta = self.r_hat + z * np.sqrt(posterior_variance(self.n))
        return argmax_lowest(theta) + 1

    def update(self, arm: int, reward: float) -> None:
        """Fold one observed reward in [0, 1] into the chosen arm's estimate."""
        if not 1 <= arm <= self.n_arms:
            raise ValueError(f"arm {arm} outside 1..{self.n_arms}")
        if not 0.0 <= reward <= 1.0:
            raise ValueError(f"reward must be in [0, 1], got {reward}")
        k = arm - 1
        self.r_hat[k] = (self.r_hat[k] * self.n[k] + reward) / (self.n[k] + 2)
        self.n[k] += 1

    def reset(self) -> None:
        """Discard all knowledge; the random stream keeps advancing."""
        self.r_hat[:] = 0.0
        self.n[:] = 0


@dataclass(frozen=True)
class ThompsonSampling:
    """Sample every arm's posterior, play the argmax."""


@dataclass(frozen=True)
class Static:
    """Always play one fixed arm (1-based)."""

    arm: int

    def __post_init__(self):
        if self.arm < 1:
            raise ValueError(f"static arm must be >= 1, got {self.arm}")


Policy = Union[ThompsonSampling, Static]


def select(policy: Policy, agent: AgentState) -> int:
    """Pick the next arm.  Static policies consume no randomness."""
    if isinstance(policy, Static):
        if policy.arm > agent.n_arms:
            raise ValueError(f"static arm {policy.arm} outside 1..{agent.n_arms}")
        return policy.arm
    return agent.sample_arm()


def shared_reward(
    report: Mapping[str, float],
    caps: Mapping[str, float],
    active_ids: Iterable[str],
) -> float:
    """Collaborative reward: worst normalized throughput among active WLANs, in [0, 1].

    Every agent receives this same value.  Throughputs are normalized by
    each WLAN's best standalone throughput.
    """
    active = list(active_ids)
    if not active:
        raise ValueError("shared_reward needs at least one active WLAN")
    for wlan_id in active:
        if caps[wlan_id] <= 0:
            raise ValueError(f"cap for {wlan_id!r} must be positive, got {caps[wlan_id]}")
    worst = min(report[wlan_id] / caps[wlan_id] for wlan_id in active)
    return min(1.0, max(0.0, worst))
