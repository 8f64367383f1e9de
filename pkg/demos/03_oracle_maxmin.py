"""Exhaustive max-min certification for the three bundled scenarios.

Sweeps every joint action profile, prints the optimal configuration(s),
and compares them against the uniform static baselines.  Under the
symmetric-rate airtime model, sharing the whole 80 MHz band at full power
beats splitting the spectrum: contention retains 1/(N+1) of the best
capacity, which here outweighs exclusive halves (see docs/MODEL_NOTES.md).
"""

from wlanopt import ctmn, oracle
from wlanopt.scenario import build_scenario

for name in ("overlap2", "line3", "grid4"):
    scenario = build_scenario(name)
    result = oracle.exhaustive_maxmin(scenario)
    ids = result.active_ids
    print(f"\n{name}: {len(result.table)} profiles over WLANs {ids}")
    print(f"  max-min optimum: {result.best_minmax / 1e6:.1f} Mbps at {result.best_profiles}")
    for profile in result.best_profiles:
        report = result.table[profile]
        shares = ", ".join(f"{i}={report[i] / 1e6:.1f}" for i in ids)
        print(f"    {profile}: {shares} Mbps")
    for k, label in ((1, "conservative"), (6, "aggressive")):
        uniform = tuple([k] * len(ids))
        m = result.min_throughput(uniform)
        print(f"  static {label} {uniform}: min {m / 1e6:.1f} Mbps")
    caps = ctmn.standalone_caps(scenario)
    print(f"  best standalone throughput: {caps[ids[0]] / 1e6:.1f} Mbps")
