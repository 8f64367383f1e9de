import math

import pytest

from wlanopt.scenario import (
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
    scenario_from_dict,
    scenario_to_dict,
)


def test_distance_identity():
    assert distance(Position(0, 0), Position(0, 0)) == 0.0


def test_distance_pythagorean():
    assert distance(Position(0, 0), Position(3, 4)) == 5.0


def test_distance_sqrt8():
    assert distance(Position(0, 0), Position(2, 2)) == pytest.approx(math.sqrt(8), rel=1e-15)


def test_distance_symmetric_nonnegative():
    pts = [Position(0, 0), Position(1.5, -2), Position(-3, 7), Position(10, 10)]
    for a in pts:
        for b in pts:
            assert distance(a, b) == distance(b, a) >= 0.0


def test_position_rejects_nonfinite():
    with pytest.raises(ScenarioError):
        Position(float("nan"), 0)
    with pytest.raises(ScenarioError):
        Position(0, float("inf"))


def test_channel_range_contiguity():
    ChannelRange((36, 40))
    ChannelRange((44, 48))
    ChannelRange((36, 40, 44, 48))
    ChannelRange((40,))
    with pytest.raises(ScenarioError):
        ChannelRange(())
    with pytest.raises(ScenarioError):
        ChannelRange((36, 44))
    with pytest.raises(ScenarioError):
        ChannelRange((40, 36))
    with pytest.raises(ScenarioError):
        ChannelRange((36, 37))


def test_channel_range_width():
    assert ChannelRange((36, 40)).width_hz() == 40e6
    assert ChannelRange((36, 40, 44, 48)).width_hz(20e6) == 80e6


def test_default_actions_table():
    s = build_scenario("overlap2")
    assert len(s.action_space) == 6
    powers = [a.tx_power_dbm for a in s.action_space]
    assert powers == [1.0, 1.0, 1.0, 20.0, 20.0, 20.0]
    chans = [a.range.channels for a in s.action_space]
    assert chans == [(36, 40), (44, 48), (36, 40, 44, 48)] * 2
    assert s.action(1) is s.action_space[0]
    assert s.action(6) is s.action_space[5]
    with pytest.raises(ValueError):
        s.action(0)
    with pytest.raises(ValueError):
        s.action(7)


def test_overlap2_geometry():
    s = build_scenario("overlap2")
    assert s.wlan_ids == ("A", "B")
    a, b = s.wlans
    assert distance(a.ap, b.ap) == 5.0
    for w in s.wlans:
        assert distance(w.ap, w.sta) == 5.0
        assert w.activation_iteration == 0


def test_line3_geometry_and_activation():
    s = build_scenario("line3")
    assert s.wlan_ids == ("A", "B", "C")
    a, b, c = s.wlans
    assert b.activation_iteration == 250
    assert a.activation_iteration == 0 and c.activation_iteration == 0
    assert distance(a.ap, b.ap) == 5.0
    assert distance(b.ap, c.ap) == 5.0
    assert distance(a.ap, c.ap) == 10.0
    for w in s.wlans:
        assert distance(w.ap, w.sta) == 5.0


def test_grid4_geometry():
    s = build_scenario("grid4")
    assert s.wlan_ids == ("A", "B", "C", "D")
    for w in s.wlans:
        assert distance(w.ap, w.sta) == math.sqrt(8)
        assert w.activation_iteration == 0
    aps = [w.ap for w in s.wlans]
    side_pairs = [(0, 1), (0, 2), (1, 3), (2, 3)]
    for i, j in side_pairs:
        assert distance(aps[i], aps[j]) == 5.0


def test_build_scenario_unknown_name():
    with pytest.raises(ScenarioError):
        build_scenario("nope")


def test_radio_defaults():
    rp = RadioParams()
    assert rp.frequency_hz == 5e9
    assert rp.base_bandwidth_hz == 20e6
    assert rp.noise_floor_dbm_20mhz == -95.0
    assert rp.cca_dbm == -62.0
    assert rp.tx_gain_db == 0.0 and rp.rx_gain_db == 0.0
    assert rp.spatial_streams == 1
    assert rp.alpha_db_per_m == 0.44
    assert rp.lambda_access == 1.0 and rp.mu_departure == 1.0


def test_radio_validation():
    with pytest.raises(ScenarioError):
        RadioParams(lambda_access=0.0)
    with pytest.raises(ScenarioError):
        RadioParams(mu_departure=-1.0)
    with pytest.raises(ScenarioError):
        RadioParams(spatial_streams=0)


def test_wlan_ap_sta_distinct():
    with pytest.raises(ScenarioError):
        Wlan("A", Position(0, 0), Position(0, 0))


def test_scenario_duplicate_ids():
    w1 = Wlan("A", Position(0, 0), Position(0, -5))
    w2 = Wlan("A", Position(5, 0), Position(5, -5))
    with pytest.raises(ScenarioError, match="duplicate"):
        Scenario(wlans=(w1, w2))


def test_scenario_needs_wlans():
    with pytest.raises(ScenarioError):
        Scenario(wlans=())


@pytest.mark.parametrize("name", ["overlap2", "line3", "grid4"])
def test_roundtrip(tmp_path, name):
    s = build_scenario(name)
    path = tmp_path / f"{name}.yaml"
    save_scenario(s, path)
    assert load_scenario(path) == s


def test_roundtrip_preserves_custom_radio(tmp_path):
    base = build_scenario("overlap2")
    custom = Scenario(
        wlans=base.wlans,
        radio=RadioParams(lambda_access=2.5, mu_departure=0.5),
        action_space=base.action_space[:2],
    )
    path = tmp_path / "custom.yaml"
    save_scenario(custom, path)
    assert load_scenario(path) == custom


def test_load_rejects_zero_wlans(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("schema: 1\nwlans: []\n")
    with pytest.raises(ScenarioError, match="wlans"):
        load_scenario(path)


def test_load_rejects_noncontiguous_channels(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text(
        "schema: 1\n"
        "actions:\n"
        "  - {tx_power_dbm: 20, channels: [36, 44]}\n"
        "wlans:\n"
        "  - {id: A, ap: [0, 0], sta: [0, -5]}\n"
    )
    with pytest.raises(ScenarioError, match="contiguous"):
        load_scenario(path)


def test_load_rejects_duplicate_ids(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text(
        "schema: 1\n"
        "wlans:\n"
        "  - {id: A, ap: [0, 0], sta: [0, -5]}\n"
        "  - {id: A, ap: [5, 0], sta: [5, -5]}\n"
    )
    with pytest.raises(ScenarioError, match="duplicate"):
        load_scenario(path)


def test_load_parse_error(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("wlans: [unclosed\n")
    with pytest.raises(ScenarioError, match="parse error"):
        load_scenario(path)


def test_from_dict_field_errors():
    with pytest.raises(ScenarioError, match=r"wlans\[0\].ap"):
        scenario_from_dict({"schema": 1, "wlans": [{"id": "A", "ap": [0], "sta": [0, -5]}]})
    with pytest.raises(ScenarioError, match="radio"):
        scenario_from_dict(
            {"schema": 1, "radio": {"bogus": 1}, "wlans": [{"id": "A", "ap": [0, 0], "sta": [0, -5]}]}
        )
    with pytest.raises(ScenarioError, match="schema"):
        scenario_from_dict({"schema": 99, "wlans": []})


def test_to_dict_is_plain_data():
    d = scenario_to_dict(build_scenario("grid4"))
    assert d["schema"] == 1
    assert len(d["wlans"]) == 4
    assert len(d["actions"]) == 6
    assert d["radio"]["cca_dbm"] == -62.0
