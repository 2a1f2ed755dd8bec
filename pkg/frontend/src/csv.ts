/**
 * Strict CSV loading for the harness outputs.
 *
 * Each figure kind expects its exact header; anything else is a schema
 * error, not something to guess around. Values are plotted verbatim —
 * no statistic is ever recomputed here.
 */
import { readFileSync } from "fs";
import Papa from "papaparse";

export class SchemaError extends Error {}

export type FigureKind = "coverage" | "volume" | "raster";

export interface FigureJob {
  kind: FigureKind;
  input: string;
  output: string;
}

export const SCHEMAS: Record<FigureKind, string[]> = {
  coverage: ["method", "d", "N", "n", "alpha", "replications", "failures", "coverage", "mc_se"],
  volume: ["d", "N", "alpha", "replications", "ratio_mean", "ratio_se"],
  raster: ["method", "level", "theta1", "theta2", "member"],
};

export type Row = Record<string, string>;

export function loadCsv(kind: FigureKind, path: string): Row[] {
  let text: string;
  try {
    text = readFileSync(path, "utf-8");
  } catch (err) {
    throw new SchemaError(`cannot read ${path}: ${(err as Error).message}`);
  }
  const parsed = Papa.parse<Row>(text.trim(), { header: true, skipEmptyLines: true });
  if (parsed.errors.length > 0) {
    throw new SchemaError(`${path}: malformed CSV (${parsed.errors[0].message})`);
  }
  const expected = SCHEMAS[kind];
  const got = parsed.meta.fields ?? [];
  if (got.length !== expected.length || expected.some((name, i) => got[i] !== name)) {
    throw new SchemaError(
      `${path}: header [${got.join(",")}] does not match the ${kind} schema [${expected.join(",")}]`,
    );
  }
  if (parsed.data.length === 0) {
    throw new SchemaError(`${path}: no data rows under the ${kind} header`);
  }
  return parsed.data;
}

export function num(row: Row, column: string): number {
  const value = Number(row[column]);
  if (!Number.isFinite(value)) {
    throw new SchemaError(`non-numeric value '${row[column]}' in column ${column}`);
  }
  return value;
}
