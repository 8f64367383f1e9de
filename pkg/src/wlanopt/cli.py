"""Command-line entry points: run experiments, sweep the oracle, list scenarios."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import oracle as oracle_mod
from . import runner
from .bandits import Policy, Static, ThompsonSampling
from .scenario import SCENARIO_NAMES, Scenario, ScenarioError, build_scenario, load_scenario


def _resolve_scenario(spec: str) -> tuple[str, Scenario]:
    if spec in SCENARIO_NAMES:
        return spec, build_scenario(spec)
    path = Path(spec)
    if path.exists():
        return path.stem, load_scenario(path)
    raise ScenarioError(f"unknown scenario {spec!r}: not a built-in name {SCENARIO_NAMES} or a file")


def _parse_policy(spec: str) -> Policy:
    if spec == "ts":
        return ThompsonSampling()
    if spec.startswith("static:"):
        try:
            return Static(int(spec.split(":", 1)[1]))
        except ValueError as exc:
            raise ValueError(f"bad static policy {spec!r}: {exc}") from exc
    raise ValueError(f"unknown policy {spec!r}, expected 'ts' or 'static:<arm>'")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wlanopt",
        description="Decentralized WLAN self-optimization experiments",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run a learning experiment and write records + summary")
    run_p.add_argument("--scenario", required=True, help="built-in name or scenario file path")
    run_p.add_argument("--iterations", type=int, default=None, help="iterations per seed")
    run_p.add_argument("--seeds", type=int, default=runner.DEFAULT_SEED_COUNT,
                       help="number of master seeds (0..N-1)")
    run_p.add_argument("--policy", default="ts", help="'ts' or 'static:<arm>' applied to every WLAN")
    run_p.add_argument("--out", required=True, help="records output path")
    run_p.add_argument("--format", choices=("csv", "json"), default="csv", dest="out_format")

    oracle_p = sub.add_parser("oracle", help="exhaustive max-min sweep, emitted as CSV")
    oracle_p.add_argument("--scenario", required=True)
    oracle_p.add_argument("--active", default="all", help="'all' or comma-separated WLAN ids")
    oracle_p.add_argument("--out", required=True, help="per-profile table output path")

    scen_p = sub.add_parser("scenarios", help="scenario utilities")
    scen_p.add_argument("action", choices=("list",))
    return parser


def _cmd_run(args) -> int:
    name, scenario = _resolve_scenario(args.scenario)
    iterations = args.iterations
    if iterations is None:
        iterations = runner.DEFAULT_ITERATIONS.get(name, 500)
    if args.seeds < 1:
        raise ValueError("--seeds must be >= 1")
    config = runner.ExperimentConfig(
        scenario=scenario,
        iterations=iterations,
        seeds=tuple(range(args.seeds)),
        policies=_parse_policy(args.policy),
        out_path=Path(args.out),
        out_format=args.out_format,
    )
    runner.run_experiment(config)
    print(f"wrote {args.out} and {runner.summary_path(Path(args.out))}")
    return 0


def _cmd_oracle(args) -> int:
    _, scenario = _resolve_scenario(args.scenario)
    active = None if args.active == "all" else [s.strip() for s in args.active.split(",") if s.strip()]
    result = oracle_mod.exhaustive_maxmin(scenario, active)
    oracle_mod.write_profile_table_csv(result, args.out)
    best = ", ".join(str(p) for p in result.best_profiles)
    print(f"wrote {args.out}; max-min {result.best_minmax!r} bps at {best}")
    return 0


def _cmd_scenarios(args) -> int:
    for name in SCENARIO_NAMES:
        print(name)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "oracle":
            return _cmd_oracle(args)
        return _cmd_scenarios(args)
    except (ScenarioError, ValueError, OSError) as exc:
        print(f"wlanopt: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
