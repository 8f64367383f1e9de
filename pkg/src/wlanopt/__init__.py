"""Decentralized WLAN self-optimization toolkit.

Thompson-sampling agents choose joint (transmit power, channel bonding)
actions per WLAN; a continuous-time Markov model of CSMA/CA channel access
turns joint profiles into per-WLAN Shannon throughput; an exhaustive oracle
certifies max-min optimal configurations.
"""

from .bandits import AgentState, Static, ThompsonSampling, select, shared_reward
from .ctmn import (
    CtmnModel,
    build_ctmn,
    build_generator,
    enumerate_feasible_states,
    per_state_capacity,
    standalone_caps,
    stationary_distribution,
    throughput,
)
from .oracle import OracleResult, exhaustive_maxmin, profile_report
from .radio import (
    LinkBudget,
    noise_power_dbm,
    overlap_factor,
    path_loss_db,
    rx_power_dbm,
    senses,
    shannon_capacity_bps,
    sinr_linear,
)
from .runner import ExperimentConfig, RunRecord, run_experiment, run_single
from .scenario import (
    Action,
    ChannelRange,
    Position,
    RadioParams,
    Scenario,
    ScenarioError,
    Wlan,
    build_scenario,
    distance,
    load_scenario,
    save_scenario,
)

__all__ = [
    "Action",
    "AgentState",
    "ChannelRange",
    "CtmnModel",
    "ExperimentConfig",
    "LinkBudget",
    "OracleResult",
    "Position",
    "RadioParams",
    "RunRecord",
    "Scenario",
    "ScenarioError",
    "Static",
    "ThompsonSampling",
    "Wlan",
    "build_ctmn",
    "build_generator",
    "build_scenario",
    "distance",
    "enumerate_feasible_states",
    "exhaustive_maxmin",
    "load_scenario",
    "noise_power_dbm",
    "overlap_factor",
    "path_loss_db",
    "per_state_capacity",
    "profile_report",
    "run_experiment",
    "run_single",
    "rx_power_dbm",
    "save_scenario",
    "select",
    "senses",
    "shannon_capacity_bps",
    "shared_reward",
    "sinr_linear",
    "standalone_caps",
    "stationary_distribution",
    "throughput",
]

__version__ = "0.1.0"
