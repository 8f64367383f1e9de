/**
 * Reader for the schema-1 CSV files emitted by the wlanopt runner and oracle:
 * a `#schema=1` marker line, a header row, then comma-separated data rows.
 */

import { readFileSync } from "fs";

export interface CsvTable {
  columns: string[];
  rows: string[][];
}

export class CsvError extends Error {}

export function readSchemaCsv(path: string): CsvTable {
  const text = readFileSync(path, "utf-8");
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new CsvError(`${path}: file is empty`);
  }
  if (lines[0] !== "#schema=1") {
    throw new CsvError(`${path}: expected first line '#schema=1', got '${lines[0]}'`);
  }
  if (lines.length < 2) {
    throw new CsvError(`${path}: missing header row`);
  }
  const columns = lines[1].split(",");
  const rows = lines.slice(2).map((line) => line.split(","));
  if (rows.length === 0) {
    throw new CsvError(`${path}: no data rows`);
  }
  for (const row of rows) {
    if (row.length !== columns.length) {
      throw new CsvError(
        `${path}: row has ${row.length} fields, header has ${columns.length}`,
      );
    }
  }
  return { columns, rows };
}

export function columnIndex(table: CsvTable, name: string, path: string): number {
  const idx = table.columns.indexOf(name);
  if (idx < 0) {
    throw new CsvError(`${path}: missing column '${name}'`);
  }
  return idx;
}

export function numberAt(row: string[], idx: number): number {
  const value = Number(row[idx]);
  if (Number.isNaN(value)) {
    throw new CsvError(`non-numeric field '${row[idx]}'`);
  }
  return value;
}
