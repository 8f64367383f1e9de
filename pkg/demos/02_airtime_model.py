"""The Markov airtime model, state by state.

Feasible global states are the sets of WLANs that can transmit at once
under pairwise carrier sensing.  With symmetric access/departure rates the
stationary distribution is uniform over those states, which makes the
airtime shares easy to read off: 1/2 alone, 1/3 for a sensing pair, and so
on.  Hidden pairs transmit together and pay for it in SINR instead.
"""

from wlanopt import ctmn
from wlanopt.scenario import build_scenario


def show(scenario, profile, label):
    ids = [i for i in scenario.wlan_ids if i in profile]
    model = ctmn.build_ctmn(scenario, profile)
    print(f"\n{label}  profile={profile}")
    print(f"  feasible states ({len(model.states)}):")
    for pi, state in zip(model.stationary, model.states):
        members = {ids[i] for i in range(len(ids)) if (state >> i) & 1} or "{}"
        print(f"    pi = {pi:.4f}  transmitting: {members}")
    report = ctmn.throughput(scenario, profile)
    for wlan_id in ids:
        print(f"  throughput {wlan_id}: {report[wlan_id] / 1e6:8.1f} Mbps")


overlap2 = build_scenario("overlap2")
show(overlap2, {"A": 6, "B": 6}, "overlap2, both on the full band at 20 dBm (mutual exclusion)")
show(overlap2, {"A": 4, "B": 5}, "overlap2, disjoint 40 MHz halves (independent)")

line3 = build_scenario("line3")
show(line3, {"A": 1, "B": 1, "C": 1}, "line3, all conservative (outer pair hidden across 10 m)")

# the hidden pair's joint state trades airtime for interference
caps_alone = ctmn.per_state_capacity(line3, {"A": 1, "C": 1}, 1)["A"]
caps_joint = ctmn.per_state_capacity(line3, {"A": 1, "C": 1}, 3)["A"]
print(f"\nouter WLAN capacity alone: {caps_alone / 1e6:.1f} Mbps, "
      f"while the far one also transmits: {caps_joint / 1e6:.1f} Mbps")
