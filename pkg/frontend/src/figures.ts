/**
 * Figure data computed from runner/oracle CSVs. Only these arrays are
 * contractual; styling is free. All aggregation is defined precisely so a
 * test can recompute them independently and compare for exact equality:
 * means sum in ascending-seed order, percentiles use linear interpolation
 * on the sorted values (h = (n-1)q).
 */

import { CsvError, CsvTable, columnIndex, numberAt } from "./csv";

export interface EvolutionArrays {
  kind: "evolution";
  iterations: number[];
  mean: number[];
  p25: number[];
  p75: number[];
}

export interface ActionHistArrays {
  kind: "action_hist";
  window: number;
  wlans: string[];
  actions: number[];
  /** frequencies[w][a] for wlans[w], actions[a]; each row sums to 1 */
  frequencies: number[][];
}

export interface ConfigBarsArrays {
  kind: "config_bars";
  wlans: string[];
  series: string[];
  /** values[s][w] in bits/s for series[s], wlans[w] */
  values: number[][];
}

export function percentile(sorted: number[], q: number): number {
  const n = sorted.length;
  if (n === 1) return sorted[0];
  const h = (n - 1) * q;
  const lo = Math.floor(h);
  const frac = h - lo;
  if (lo + 1 >= n) return sorted[n - 1];
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

interface RunRows {
  seed: number[];
  iteration: number[];
  wlan: string[];
  action: number[];
  throughput: number[];
  minThroughput: number[];
}

function parseRun(table: CsvTable, path: string): RunRows {
  const iSeed = columnIndex(table, "seed", path);
  const iIter = columnIndex(table, "iteration", path);
  const iWlan = columnIndex(table, "wlan", path);
  const iAction = columnIndex(table, "action", path);
  const iThr = columnIndex(table, "throughput_bps", path);
  const iMin = columnIndex(table, "min_throughput_bps", path);
  const out: RunRows = { seed: [], iteration: [], wlan: [], action: [], throughput: [], minThroughput: [] };
  for (const row of table.rows) {
    out.seed.push(numberAt(row, iSeed));
    out.iteration.push(numberAt(row, iIter));
    out.wlan.push(row[iWlan]);
    out.action.push(numberAt(row, iAction));
    out.throughput.push(numberAt(row, iThr));
    out.minThroughput.push(numberAt(row, iMin));
  }
  return out;
}

/** Per-iteration min-throughput: mean across seeds with interquartile band. */
export function evolutionArrays(table: CsvTable, path: string): EvolutionArrays {
  const run = parseRun(table, path);
  const perIteration = new Map<number, Map<number, number>>();
  for (let i = 0; i < run.iteration.length; i++) {
    const t = run.iteration[i];
    let bySeed = perIteration.get(t);
    if (!bySeed) {
      bySeed = new Map();
      perIteration.set(t, bySeed);
    }
    if (!bySeed.has(run.seed[i])) {
      bySeed.set(run.seed[i], run.minThroughput[i]);
    }
  }
  const iterations = [...perIteration.keys()].sort((a, b) => a - b);
  const mean: number[] = [];
  const p25: number[] = [];
  const p75: number[] = [];
  for (const t of iterations) {
    const bySeed = perIteration.get(t)!;
    const seeds = [...bySeed.keys()].sort((a, b) => a - b);
    const values = seeds.map((s) => bySeed.get(s)!);
    let total = 0;
    for (const v of values) total += v;
    mean.push(total / values.length);
    const sorted = [...values].sort((a, b) => a - b);
    p25.push(percentile(sorted, 0.25));
    p75.push(percentile(sorted, 0.75));
  }
  return { kind: "evolution", iterations, mean, p25, p75 };
}

/** Per-WLAN action selection frequency over the final `window` iterations. */
export function actionHistArrays(table: CsvTable, path: string, window: number): ActionHistArrays {
  const run = parseRun(table, path);
  const maxIteration = Math.max(...run.iteration);
  const maxAction = Math.max(...run.action);
  const lo = maxIteration - window;
  const wlans: string[] = [];
  const counts = new Map<string, Map<number, number>>();
  for (let i = 0; i < run.iteration.length; i++) {
    const w = run.wlan[i];
    if (!counts.has(w)) {
      counts.set(w, new Map());
      wlans.push(w);
    }
    if (run.iteration[i] <= lo) continue;
    const byAction = counts.get(w)!;
    byAction.set(run.action[i], (byAction.get(run.action[i]) ?? 0) + 1);
  }
  const actions = Array.from({ length: maxAction }, (_, i) => i + 1);
  const frequencies = wlans.map((w) => {
    const byAction = counts.get(w)!;
    let total = 0;
    for (const c of byAction.values()) total += c;
    if (total === 0) {
      throw new CsvError(`${path}: WLAN ${w} has no rows in the final ${window} iterations`);
    }
    return actions.map((a) => (byAction.get(a) ?? 0) / total);
  });
  return { kind: "action_hist", window, wlans, actions, frequencies };
}

interface OracleRows {
  wlans: string[];
  actions: number[][];
  throughputs: number[][];
  min: number[];
}

function parseOracle(table: CsvTable, path: string): OracleRows {
  const wlans = table.columns
    .filter((c) => c.startsWith("action_"))
    .map((c) => c.slice("action_".length));
  if (wlans.length === 0) {
    throw new CsvError(`${path}: missing column 'action_<wlan>'`);
  }
  const actionIdx = wlans.map((w) => columnIndex(table, `action_${w}`, path));
  const thrIdx = wlans.map((w) => columnIndex(table, `throughput_${w}_bps`, path));
  const minIdx = columnIndex(table, "min_throughput_bps", path);
  const actions: number[][] = [];
  const throughputs: number[][] = [];
  const min: number[] = [];
  for (const row of table.rows) {
    actions.push(actionIdx.map((i) => numberAt(row, i)));
    throughputs.push(thrIdx.map((i) => numberAt(row, i)));
    min.push(numberAt(row, minIdx));
  }
  return { wlans, actions, throughputs, min };
}

/**
 * Grouped per-WLAN throughput: conservative static (all pick action 1),
 * aggressive static (all pick the highest action number in the table),
 * the learned behavior (mean per-WLAN throughput over the final `window`
 * iterations of the run), and the max-min optimum (first best row).
 */
export function configBarsArrays(
  runTable: CsvTable,
  runPath: string,
  oracleTable: CsvTable,
  oraclePath: string,
  window: number,
): ConfigBarsArrays {
  const oracle = parseOracle(oracleTable, oraclePath);
  const run = parseRun(runTable, runPath);
  const maxAction = Math.max(...oracle.actions.map((row) => Math.max(...row)));

  const uniformRow = (k: number): number[] => {
    for (let r = 0; r < oracle.actions.length; r++) {
      if (oracle.actions[r].every((a) => a === k)) return oracle.throughputs[r];
    }
    throw new CsvError(`${oraclePath}: no row with every action = ${k}`);
  };
  const static1 = uniformRow(1);
  const static2 = uniformRow(maxAction);

  let bestRow = 0;
  for (let r = 1; r < oracle.min.length; r++) {
    if (oracle.min[r] > oracle.min[bestRow]) bestRow = r;
  }
  const best = oracle.throughputs[bestRow];

  const maxIteration = Math.max(...run.iteration);
  const lo = maxIteration - window;
  const tsFinal = oracle.wlans.map((w) => {
    let total = 0;
    let count = 0;
    for (let i = 0; i < run.iteration.length; i++) {
      if (run.wlan[i] === w && run.iteration[i] > lo) {
        total += run.throughput[i];
        count += 1;
      }
    }
    if (count === 0) {
      throw new CsvError(`${runPath}: WLAN ${w} has no rows in the final ${window} iterations`);
    }
    return total / count;
  });

  return {
    kind: "config_bars",
    wlans: oracle.wlans,
    series: ["static_1", "static_2", "ts_final", "oracle_optimum"],
    values: [static1, static2, tsFinal, best],
  };
}

export type FigureArrays = EvolutionArrays | ActionHistArrays | ConfigBarsArrays;
