import itertools
import math

import numpy as np
import pytest

from wlanopt import ctmn
from wlanopt.scenario import build_scenario

# Standalone capacity anchor for (20 dBm, 80 MHz) at 5 m:
#   P_s = 20 - 62.60057 = -42.60057 dBm, noise = -95 + 10 log10(4) = -88.97940 dBm
#   SINR = 10^4.6378828, C = 80e6 * log2(1 + SINR) = 1.2325397e9
CAP_ACTION6_5M = 1.2325397036e9


@pytest.fixture(scope="module")
def overlap2():
    return build_scenario("overlap2")


@pytest.fixture(scope="module")
def line3():
    return build_scenario("line3")


@pytest.fixture(scope="module")
def grid4():
    return build_scenario("grid4")


def test_states_mutual_exclusion(overlap2):
    assert ctmn.enumerate_feasible_states(overlap2, {"A": 6, "B": 6}) == [0, 1, 2]


def test_states_disjoint(overlap2):
    assert ctmn.enumerate_feasible_states(overlap2, {"A": 4, "B": 5}) == [0, 1, 2, 3]


def test_states_single(overlap2):
    assert ctmn.enumerate_feasible_states(overlap2, {"A": 6}) == [0, 1]


def test_states_empty_profile(overlap2):
    assert ctmn.enumerate_feasible_states(overlap2, {}) == [0]


def test_states_hidden_pair(line3):
    # outer WLANs at 1 dBm do not hear each other across 10 m; the middle
    # one excludes both
    states = ctmn.enumerate_feasible_states(line3, {"A": 1, "B": 1, "C": 1})
    assert states == [0, 1, 2, 4, 5]  # {}, {A}, {B}, {C}, {A,C}


def test_profile_validation(overlap2):
    with pytest.raises(ValueError):
        ctmn.enumerate_feasible_states(overlap2, {"Z": 1})
    with pytest.raises(ValueError):
        ctmn.enumerate_feasible_states(overlap2, {"A": 7})
    with pytest.raises(ValueError):
        ctmn.enumerate_feasible_states(overlap2, {"A": 0})


def test_generator_two_state():
    q = ctmn.build_generator([0, 1], 2.0, 3.0)
    assert np.allclose(q, [[-2.0, 2.0], [3.0, -3.0]])


def test_generator_three_state_exclusion():
    q = ctmn.build_generator([0, 1, 2], 1.0, 1.0)
    expected = [[-2.0, 1.0, 1.0], [1.0, -1.0, 0.0], [1.0, 0.0, -1.0]]
    assert np.allclose(q, expected)


def test_generator_independent_pair():
    q = ctmn.build_generator([0, 1, 2, 3], 1.0, 1.0)
    assert q[0, 0] == -2.0
    assert np.allclose(q.sum(axis=1), 0.0)


def test_generator_rows_sum_zero(grid4):
    for profile in ({"A": 6, "B": 6, "C": 6, "D": 6}, {"A": 1, "B": 2, "C": 2, "D": 1}):
        states = ctmn.enumerate_feasible_states(grid4, profile)
        q = ctmn.build_generator(states, 1.0, 1.0)
        assert np.allclose(q.sum(axis=1), 0.0, atol=1e-12)


def test_stationary_two_state_symmetric():
    pi = ctmn.stationary_distribution(np.array([[-1.0, 1.0], [1.0, -1.0]]))
    assert pi == pytest.approx([0.5, 0.5], abs=1e-12)


def test_stationary_three_state_exclusion():
    q = ctmn.build_generator([0, 1, 2], 1.0, 1.0)
    pi = ctmn.stationary_distribution(q)
    assert pi == pytest.approx([1 / 3, 1 / 3, 1 / 3], abs=1e-12)


def test_stationary_independent_pair():
    q = ctmn.build_generator([0, 1, 2, 3], 1.0, 1.0)
    pi = ctmn.stationary_distribution(q)
    assert pi == pytest.approx([0.25] * 4, abs=1e-12)


def test_stationary_asymmetric_rates():
    # two-state birth-death: pi_on = lam / (lam + mu)
    q = ctmn.build_generator([0, 1], 3.0, 1.0)
    pi = ctmn.stationary_distribution(q)
    assert pi == pytest.approx([0.25, 0.75], abs=1e-12)


def test_stationary_rejects_garbage():
    with pytest.raises(ValueError):
        ctmn.stationary_distribution(np.array([[1.0, 1.0], [1.0, 1.0]]))


def test_per_state_capacity_empty(overlap2):
    report = ctmn.per_state_capacity(overlap2, {"A": 6, "B": 6}, 0)
    assert report == {"A": 0.0, "B": 0.0}


def test_per_state_capacity_standalone(overlap2):
    report = ctmn.per_state_capacity(overlap2, {"A": 6}, 1)
    assert report["A"] == pytest.approx(CAP_ACTION6_5M, rel=1e-7)
    assert report["B"] == 0.0


def test_per_state_capacity_disjoint_pair(overlap2):
    alone_a = ctmn.per_state_capacity(overlap2, {"A": 4}, 1)["A"]
    both = ctmn.per_state_capacity(overlap2, {"A": 4, "B": 5}, 3)
    assert both["A"] == pytest.approx(alone_a, rel=1e-12)
    assert both["B"] == pytest.approx(alone_a, rel=1e-9)


def test_per_state_capacity_interference_degrades(line3):
    # hidden outer pair at 1 dBm: simultaneous transmission cuts capacity
    alone = ctmn.per_state_capacity(line3, {"A": 1, "C": 1}, 1)["A"]
    joint = ctmn.per_state_capacity(line3, {"A": 1, "C": 1}, 3)
    assert 0.0 < joint["A"] < alone
    assert joint["A"] == pytest.approx(joint["C"], rel=1e-9)


def test_throughput_single_half_airtime(overlap2):
    cap = ctmn.per_state_capacity(overlap2, {"A": 6}, 1)["A"]
    got = ctmn.throughput(overlap2, {"A": 6})
    assert got["A"] == pytest.approx(0.5 * cap, rel=1e-9)
    assert got["B"] == 0.0


def test_throughput_overlap2_thirds(overlap2):
    cap = ctmn.per_state_capacity(overlap2, {"A": 6}, 1)["A"]
    got = ctmn.throughput(overlap2, {"A": 6, "B": 6})
    assert got["A"] == pytest.approx(cap / 3, rel=1e-9)
    assert got["B"] == pytest.approx(cap / 3, rel=1e-9)


def test_throughput_inactive_zero(line3):
    got = ctmn.throughput(line3, {"A": 6, "C": 6})
    assert got["B"] == 0.0


def test_throughput_disjoint_exact_airtime_share(overlap2):
    # no sensing anywhere: each WLAN gets lam/(lam+mu) of standalone capacity
    cap_a = ctmn.per_state_capacity(overlap2, {"A": 4}, 1)["A"]
    cap_b = ctmn.per_state_capacity(overlap2, {"B": 5}, 1)["B"]
    got = ctmn.throughput(overlap2, {"A": 4, "B": 5})
    assert got["A"] == pytest.approx(0.5 * cap_a, rel=1e-9)
    assert got["B"] == pytest.approx(0.5 * cap_b, rel=1e-9)


def test_throughput_bounded_by_standalone(grid4):
    rng = np.random.default_rng(7)
    ids = list(grid4.wlan_ids)
    for _ in range(25):
        profile = {i: int(rng.integers(1, 7)) for i in ids}
        report = ctmn.throughput(grid4, profile)
        for i in ids:
            alone = ctmn.throughput(grid4, {i: profile[i]})[i]
            assert report[i] <= alone * (1 + 1e-12)


def test_feasibility_downward_closed(grid4):
    rng = np.random.default_rng(3)
    for _ in range(20):
        profile = {i: int(rng.integers(1, 7)) for i in grid4.wlan_ids}
        states = set(ctmn.enumerate_feasible_states(grid4, profile))
        for s in states:
            sub = s
            while sub:
                sub = (sub - 1) & s
                assert sub in states


def test_stationary_residuals_all_grid4_profiles(grid4):
    for profile in itertools.product(range(1, 7), repeat=2):
        model = ctmn.build_ctmn(grid4, {"A": profile[0], "B": profile[1]})
        assert abs(model.stationary.sum() - 1.0) <= 1e-9
        assert (model.stationary >= 0).all()
        assert np.max(np.abs(model.stationary @ model.generator)) <= 1e-9


def _simulate_occupancy(q, states, horizon, seed):
    """Independent long-run occupancy estimate via exponential holding times."""
    rng = np.random.default_rng(seed)
    time_in = np.zeros(len(states))
    i = 0
    t = 0.0
    while t < horizon:
        rates = q[i].copy()
        rates[i] = 0.0
        total = rates.sum()
        if total <= 0:
            time_in[i] += horizon - t
            break
        dwell = rng.exponential(1.0 / total)
        dwell = min(dwell, horizon - t)
        time_in[i] += dwell
        t += dwell
        i = rng.choice(len(states), p=rates / total)
    return time_in / time_in.sum()


@pytest.mark.parametrize(
    "name,profile",
    [
        ("overlap2", {"A": 6, "B": 6}),
        ("overlap2", {"A": 4, "B": 5}),
        ("line3", {"A": 1, "B": 1, "C": 1}),
    ],
)
def test_stationary_matches_simulation(name, profile):
    scenario = build_scenario(name)
    model = ctmn.build_ctmn(scenario, profile)
    occupancy = _simulate_occupancy(np.asarray(model.generator), model.states, 2e5, seed=11)
    tv = 0.5 * np.abs(occupancy - model.stationary).sum()
    assert tv <= 1e-2


def test_standalone_caps(overlap2):
    caps = ctmn.standalone_caps(overlap2)
    cap = ctmn.per_state_capacity(overlap2, {"A": 6}, 1)["A"]
    assert caps["A"] == pytest.approx(0.5 * cap, rel=1e-9)
    assert caps["A"] == caps["B"]


def test_standalone_caps_fresh_copy(overlap2):
    caps = ctmn.standalone_caps(overlap2)
    caps["A"] = -1.0
    assert ctmn.standalone_caps(overlap2)["A"] > 0


def _with_rates(name, lam, mu):
    from wlanopt.scenario import RadioParams, Scenario

    base = build_scenario(name)
    return Scenario(
        wlans=base.wlans,
        radio=RadioParams(lambda_access=lam, mu_departure=mu),
        action_space=base.action_space,
    )


def test_asymmetric_rates_airtime_share():
    # a lone WLAN transmits lam/(lam+mu) of the time
    scenario = _with_rates("overlap2", 3.0, 1.0)
    cap = ctmn.per_state_capacity(scenario, {"A": 6}, 1)["A"]
    got = ctmn.throughput(scenario, {"A": 6})["A"]
    assert got == pytest.approx(0.75 * cap, rel=1e-9)


def test_asymmetric_rates_concentrate_on_busy_states():
    # lam >> mu pushes occupancy toward maximal transmit sets
    scenario = _with_rates("overlap2", 20.0, 1.0)
    model = ctmn.build_ctmn(scenario, {"A": 6, "B": 6})
    pi_empty = model.stationary[model.states.index(0)]
    pi_single = model.stationary[model.states.index(1)]
    assert pi_single > pi_empty
    assert pi_single == pytest.approx(20.0 * pi_empty, rel=1e-9)


def test_detailed_balance_product_form():
    # single-WLAN join/leave transitions satisfy pi_s q(s,t) = pi_t q(t,s),
    # including with asymmetric rates
    scenario = _with_rates("grid4", 2.5, 0.5)
    rng = np.random.default_rng(23)
    for _ in range(10):
        profile = {i: int(rng.integers(1, 7)) for i in scenario.wlan_ids}
        model = ctmn.build_ctmn(scenario, profile)
        q = np.asarray(model.generator)
        n = len(model.states)
        for i in range(n):
            for j in range(n):
                if i != j and (q[i, j] > 0 or q[j, i] > 0):
                    flow_ij = model.stationary[i] * q[i, j]
                    flow_ji = model.stationary[j] * q[j, i]
                    assert flow_ij == pytest.approx(flow_ji, rel=1e-8)
