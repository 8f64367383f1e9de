#!/usr/bin/env node
/**
 * plots <kind> --in CSV [--oracle CSV] --out IMG [--window N] [--dump-arrays PATH]
 *
 * kind: evolution | action_hist | config_bars
 * Reads schema-1 CSVs produced by the wlanopt runner/oracle, writes an SVG,
 * and optionally dumps the exact plotted arrays as JSON.
 */

import { writeFileSync } from "fs";

import { CsvError, readSchemaCsv } from "./csv";
import {
  FigureArrays,
  actionHistArrays,
  configBarsArrays,
  evolutionArrays,
} from "./figures";
import { renderActionHist, renderConfigBars, renderEvolution } from "./svg";

const KINDS = ["evolution", "action_hist", "config_bars"] as const;
type Kind = (typeof KINDS)[number];

export interface CliOptions {
  kind: Kind;
  input: string;
  oracle?: string;
  out: string;
  window: number;
  dumpArrays?: string;
}

export function parseArgs(argv: string[]): CliOptions {
  if (argv.length === 0) {
    throw new Error(`usage: plots <${KINDS.join("|")}> --in CSV [--oracle CSV] --out IMG [--window N] [--dump-arrays PATH]`);
  }
  const kind = argv[0] as Kind;
  if (!KINDS.includes(kind)) {
    throw new Error(`unknown figure kind '${argv[0]}', expected one of: ${KINDS.join(", ")}`);
  }
  const opts: Partial<CliOptions> = { kind, window: 100 };
  for (let i = 1; i < argv.length; i += 2) {
    const flag = argv[i];
    const value = argv[i + 1];
    if (value === undefined) {
      throw new Error(`flag ${flag} needs a value`);
    }
    switch (flag) {
      case "--in":
        opts.input = value;
        break;
      case "--oracle":
        opts.oracle = value;
        break;
      case "--out":
        opts.out = value;
        break;
      case "--window": {
        const w = Number(value);
        if (!Number.isInteger(w) || w < 1) {
          throw new Error(`--window must be a positive integer, got '${value}'`);
        }
        opts.window = w;
        break;
      }
      case "--dump-arrays":
        opts.dumpArrays = value;
        break;
      default:
        throw new Error(`unknown flag '${flag}'`);
    }
  }
  if (!opts.input) throw new Error("--in is required");
  if (!opts.out) throw new Error("--out is required");
  if (kind === "config_bars" && !opts.oracle) {
    throw new Error("config_bars needs --oracle CSV");
  }
  return opts as CliOptions;
}

export function computeArrays(opts: CliOptions): FigureArrays {
  const run = readSchemaCsv(opts.input);
  switch (opts.kind) {
    case "evolution":
      return evolutionArrays(run, opts.input);
    case "action_hist":
      return actionHistArrays(run, opts.input, opts.window);
    case "config_bars": {
      const oracle = readSchemaCsv(opts.oracle!);
      return configBarsArrays(run, opts.input, oracle, opts.oracle!, opts.window);
    }
  }
}

function render(arrays: FigureArrays): string {
  switch (arrays.kind) {
    case "evolution":
      return renderEvolution(arrays);
    case "action_hist":
      return renderActionHist(arrays);
    case "config_bars":
      return renderConfigBars(arrays);
  }
}

export function run(argv: string[]): number {
  let opts: CliOptions;
  try {
    opts = parseArgs(argv);
  } catch (err) {
    process.stderr.write(`plots: ${(err as Error).message}\n`);
    return 2;
  }
  try {
    const arrays = computeArrays(opts);
    const svg = render(arrays);
    writeFileSync(opts.out, svg, "utf-8");
    if (opts.dumpArrays) {
      writeFileSync(opts.dumpArrays, JSON.stringify(arrays) + "\n", "utf-8");
    }
    return 0;
  } catch (err) {
    if (err instanceof CsvError || (err as NodeJS.ErrnoException).code !== undefined) {
      process.stderr.write(`plots: ${(err as Error).message}\n`);
      return 1;
    }
    throw err;
  }
}

if (require.main === module) {
  process.exit(run(process.argv.slice(2)));
}
