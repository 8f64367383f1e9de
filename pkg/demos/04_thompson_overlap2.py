"""Thompson sampling on the two-WLAN overlap scenario.

Each WLAN independently samples one of the six (power, channel) arms per
iteration; both receive the same collaborative reward, the worst
normalized throughput.  A handful of seeds shows the exploration pattern
and how often the final behavior matches the certified optimum.  Lock-in
under the verbatim biased estimator is slow: expect most seeds to still be
exploring at 500 iterations and converged by a few thousand.
"""

from collections import Counter

from wlanopt import oracle
from wlanopt.runner import ExperimentConfig, run_single
from wlanopt.scenario import build_scenario

scenario = build_scenario("overlap2")
ties = set(oracle.exhaustive_maxmin(scenario).best_profiles)
print(f"certified max-min optima: {sorted(ties)}")

for iterations in (500, 2000):
    cfg = ExperimentConfig(scenario=scenario, iterations=iterations, seeds=(0,))
    converged = 0
    seeds = range(10)
    for seed in seeds:
        records = run_single(scenario, cfg, seed)
        tail = {}
        for r in records:
            if r.iteration > iterations - 100:
                tail.setdefault(r.iteration, {})[r.wlan] = r.action
        modal = Counter(
            tuple(p[i] for i in scenario.wlan_ids) for p in tail.values()
        ).most_common(1)[0][0]
        converged += modal in ties
        if seed < 3 and iterations == 500:
            rewards = [r.reward for r in records if r.wlan == "A"]
            print(
                f"  seed {seed}: modal tail profile {modal}, "
                f"mean reward last 100 = {sum(rewards[-100:]) / 100:.3f}"
            )
    print(f"T={iterations}: {converged}/{len(list(seeds))} seeds ended on an optimum")
