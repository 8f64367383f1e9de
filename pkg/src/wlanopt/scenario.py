"""WLAN deployments: geometry, radio constants, and the power/channel action space.

Scenario objects are immutable after construction and can be shared freely
across concurrent evaluations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

import yaml

BASIC_CHANNELS = (36, 40, 44, 48)
SCENARIO_NAMES = ("overlap2", "line3", "grid4")
SCENARIO_SCHEMA_VERSION = 1


class ScenarioError(ValueError):
    """A scenario definition violates a structural constraint."""


@dataclass(frozen=True)
class Position:
    """A point in the deployment plane, in meters."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ScenarioError(f"position: coordinates must be finite, got ({self.x}, {self.y})")


def distance(a: Position, b: Position) -> float:
    """Euclidean distance between two positions, in meters."""
    return math.hypot(a.x - b.x, a.y - b.y)


@dataclass(frozen=True)
class RadioParams:
    """Radio constants shared by all WLANs in a scenario.

    Defaults are the standard 5 GHz indoor set: 20 MHz basic channels,
    -95 dBm noise floor per 20 MHz, -62 dBm clear channel assessment,
    unit antenna gains, one spatial stream, and 0.44 dB/m excess
    attenuation on top of free-space loss.  ``lambda_access`` and
    ``mu_departure`` are the channel-access and departure rates of the
    Markov airtime model; both default to 1 (symmetric rates).
    """

    frequency_hz: float = 5e9
    base_bandwidth_hz: float = 20e6
    noise_floor_dbm_20mhz: float = -95.0
    cca_dbm: float = -62.0
    tx_gain_db: float = 0.0
    rx_gain_db: float = 0.0
    spatial_streams: int = 1
    alpha_db_per_m: float = 0.44
    lambda_access: float = 1.0
    mu_departure: float = 1.0

    def __post_init__(self):
        if self.frequency_hz <= 0:
            raise ScenarioError(f"radio.frequency_hz: must be positive, got {self.frequency_hz}")
        if self.base_bandwidth_hz <= 0:
            raise ScenarioError(f"radio.base_bandwidth_hz: must be positive, got {self.base_bandwidth_hz}")
        if self.spatial_streams < 1:
            raise ScenarioError(f"radio.spatial_streams: must be >= 1, got {self.spatial_streams}")
        if self.lambda_access <= 0:
            raise ScenarioError(f"radio.lambda_access: must be positive, got {self.lambda_access}")
        if self.mu_departure <= 0:
            raise ScenarioError(f"radio.mu_departure: must be positive, got {self.mu_departure}")


@dataclass(frozen=True)
class ChannelRange:
    """A non-empty contiguous run of basic 20 MHz channels."""

    channels: tuple[int, ...]

    def __post_init__(self):
        channels = tuple(self.channels)
        object.__setattr__(self, "channels", channels)
        if not channels:
            raise ScenarioError("channels: channel range must be non-empty")
        for ch in channels:
            if ch not in BASIC_CHANNELS:
                raise ScenarioError(f"channels: unknown channel {ch}, expected one of {BASIC_CHANNELS}")
        start = BASIC_CHANNELS.index(channels[0])
        if channels != BASIC_CHANNELS[start:start + len(channels)]:
            raise ScenarioError(f"channels: {list(channels)} is not contiguous in {BASIC_CHANNELS}")

    def __len__(self) -> int:
        return len(self.channels)

    def width_hz(self, base_bandwidth_hz: float = 20e6) -> float:
        return base_bandwidth_hz * len(self.channels)


@dataclass(frozen=True)
class Action:
    """One joint (transmit power, channel range) configuration."""

    tx_power_dbm: float
    range: ChannelRange


# Action numbers 1..6: low/high power crossed with the two 40 MHz halves
# and the full 80 MHz band.
DEFAULT_ACTIONS = (
    Action(1.0, ChannelRange((36, 40))),
    Action(1.0, ChannelRange((44, 48))),
    Action(1.0, ChannelRange((36, 40, 44, 48))),
    Action(20.0, ChannelRange((36, 40))),
    Action(20.0, ChannelRange((44, 48))),
    Action(20.0, ChannelRange((36, 40, 44, 48))),
)


@dataclass(frozen=True)
class Wlan:
    """One access point serving one station, downlink only.

    ``activation_iteration`` is the first iteration at which the WLAN
    participates; 0 means active from the start.
    """

    id: str
    ap: Position
    sta: Position
    activation_iteration: int = 0

    def __post_init__(self):
        if self.ap == self.sta:
            raise ScenarioError(f"wlan {self.id!r}: ap and sta must be distinct positions")
        if self.activation_iteration < 0:
            raise ScenarioError(
                f"wlan {self.id!r}: activation_iteration must be >= 0, got {self.activation_iteration}"
            )


@dataclass(frozen=True)
class Scenario:
    """A fixed deployment: WLANs, radio constants, and the shared action space."""

    wlans: tuple[Wlan, ...]
    radio: RadioParams = field(default_factory=RadioParams)
    action_space: tuple[Action, ...] = DEFAULT_ACTIONS

    def __post_init__(self):
        object.__setattr__(self, "wlans", tuple(self.wlans))
        object.__setattr__(self, "action_space", tuple(self.action_space))
        if not self.wlans:
            raise ScenarioError("wlans: scenario must contain at least one WLAN")
        if not self.action_space:
            raise ScenarioError("actions: action space must be non-empty")
        seen = set()
        for i, w in enumerate(self.wlans):
            if w.id in seen:
                raise ScenarioError(f"wlans[{i}].id: duplicate id {w.id!r}")
            seen.add(w.id)

    @property
    def wlan_ids(self) -> tuple[str, ...]:
        return tuple(w.id for w in self.wlans)

    def wlan(self, wlan_id: str) -> Wlan:
        for w in self.wlans:
            if w.id == wlan_id:
                return w
        raise KeyError(wlan_id)

    def action(self, number: int) -> Action:
        """Action by its 1-based action number."""
        if not 1 <= number <= len(self.action_space):
            raise ValueError(f"action number {number} outside 1..{len(self.action_space)}")
        return self.action_space[number - 1]


def build_scenario(name: str) -> Scenario:
    """Build one of the canonical scenarios: ``overlap2``, ``line3``, ``grid4``.

    overlap2: two WLANs with APs 5 m apart, each STA 5 m below its AP.
    line3: three collinear WLANs at 5 m spacing; the middle one joins at
    iteration 250.  grid4: APs on the corners of a 5 m square, each STA
    offset (+-2, +-2) toward the center (AP-STA distance sqrt(8) m).
    """
    if name == "overlap2":
        wlans = (
            Wlan("A", Position(0.0, 0.0), Position(0.0, -5.0)),
            Wlan("B", Position(5.0, 0.0), Position(5.0, -5.0)),
        )
    elif name == "line3":
        wlans = (
            Wlan("A", Position(0.0, 0.0), Position(0.0, -5.0)),
            Wlan("B", Position(5.0, 0.0), Position(5.0, -5.0), activation_iteration=250),
            Wlan("C", Position(10.0, 0.0), Position(10.0, -5.0)),
        )
    elif name == "grid4":
        wlans = (
            Wlan("A", Position(0.0, 0.0), Position(2.0, 2.0)),
            Wlan("B", Position(5.0, 0.0), Position(3.0, 2.0)),
            Wlan("C", Position(0.0, 5.0), Position(2.0, 3.0)),
            Wlan("D", Position(5.0, 5.0), Position(3.0, 3.0)),
        )
    else:
        raise ScenarioError(f"unknown scenario {name!r}, expected one of {SCENARIO_NAMES}")
    return Scenario(wlans=wlans)


def scenario_to_dict(scenario: Scenario) -> dict:
    """Plain-data form of a scenario, suitable for YAML serialization."""
    return {
        "schema": SCENARIO_SCHEMA_VERSION,
        "radio": {
            "frequency_hz": scenario.radio.frequency_hz,
            "base_bandwidth_hz": scenario.radio.base_bandwidth_hz,
            "noise_floor_dbm_20mhz": scenario.radio.noise_floor_dbm_20mhz,
            "cca_dbm": scenario.radio.cca_dbm,
            "tx_gain_db": scenario.radio.tx_gain_db,
            "rx_gain_db": scenario.radio.rx_gain_db,
            "spatial_streams": scenario.radio.spatial_streams,
            "alpha_db_per_m": scenario.radio.alpha_db_per_m,
            "lambda_access": scenario.radio.lambda_access,
            "mu_departure": scenario.radio.mu_departure,
        },
        "actions": [
            {"tx_power_dbm": a.tx_power_dbm, "channels": list(a.range.channels)}
            for a in scenario.action_space
        ],
        "wlans": [
            {
                "id": w.id,
                "ap": [w.ap.x, w.ap.y],
                "sta": [w.sta.x, w.sta.y],
                "activation": w.activation_iteration,
            }
            for w in scenario.wlans
        ],
    }


def _position(raw, where: str) -> Position:
    if not isinstance(raw, (list, tuple)) or len(raw) != 2:
        raise ScenarioError(f"{where}: expected [x, y], got {raw!r}")
    try:
        return Position(float(raw[0]), float(raw[1]))
    except (TypeError, ValueError) as exc:
        raise ScenarioError(f"{where}: {exc}") from exc


def scenario_from_dict(data: dict) -> Scenario:
    if not isinstance(data, dict):
        raise ScenarioError(f"scenario file must contain a mapping, got {type(data).__name__}")
    schema = data.get("schema", SCENARIO_SCHEMA_VERSION)
    if schema != SCENARIO_SCHEMA_VERSION:
        raise ScenarioError(f"schema: unsupported version {schema!r}")

    radio_raw = data.get("radio", {})
    if not isinstance(radio_raw, dict):
        raise ScenarioError("radio: expected a mapping")
    known = set(RadioParams.__dataclass_fields__)
    unknown = set(radio_raw) - known
    if unknown:
        raise ScenarioError(f"radio: unknown keys {sorted(unknown)}")
    radio = RadioParams(**radio_raw)

    actions_raw = data.get("actions")
    if actions_raw is None:
        actions = DEFAULT_ACTIONS
    else:
        if not isinstance(actions_raw, list):
            raise ScenarioError("actions: expected a list")
        actions = []
        for i, a in enumerate(actions_raw):
            if not isinstance(a, dict) or "tx_power_dbm" not in a or "channels" not in a:
                raise ScenarioError(f"actions[{i}]: expected {{tx_power_dbm, channels}}")
            try:
                actions.append(Action(float(a["tx_power_dbm"]), ChannelRange(tuple(a["channels"]))))
            except ScenarioError as exc:
                raise ScenarioError(f"actions[{i}].{exc}") from exc
        actions = tuple(actions)

    wlans_raw = data.get("wlans")
    if not isinstance(wlans_raw, list) or not wlans_raw:
        raise ScenarioError("wlans: expected a non-empty list")
    wlans = []
    for i, w in enumerate(wlans_raw):
        if not isinstance(w, dict):
            raise ScenarioError(f"wlans[{i}]: expected a mapping")
        for key in ("id", "ap", "sta"):
            if key not in w:
                raise ScenarioError(f"wlans[{i}].{key}: missing")
        try:
            wlans.append(
                Wlan(
                    id=str(w["id"]),
                    ap=_position(w["ap"], f"wlans[{i}].ap"),
                    sta=_position(w["sta"], f"wlans[{i}].sta"),
                    activation_iteration=int(w.get("activation", 0)),
                )
            )
        except ScenarioError:
            raise
        except (TypeError, ValueError) as exc:
            raise ScenarioError(f"wlans[{i}]: {exc}") from exc
    return Scenario(wlans=tuple(wlans), radio=radio, action_space=actions)


def load_scenario(path: str | Path) -> Scenario:
    """Load and validate a scenario from a YAML file."""
    path = Path(path)
    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8"))
    except yaml.YAMLError as exc:
        raise ScenarioError(f"{path}: parse error: {exc}") from exc
    return scenario_from_dict(data)


def save_scenario(scenario: Scenario, path: str | Path) -> None:
    """Write a scenario to a YAML file that round-trips through load_scenario."""
    Path(path).write_text(
        yaml.safe_dump(scenario_to_dict(scenario), sort_keys=False), encoding="utf-8"
    )
