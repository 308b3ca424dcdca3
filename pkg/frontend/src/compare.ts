/**
 * Side-by-side scenario comparison.
 *
 * Columns are the selected scenarios in selection order; when exactly two
 * are selected a delta column shows the difference (second minus first) of
 * the service-reported values. Subtraction of two response numbers is the
 * only arithmetic performed here.
 */

import { fmt, fmtDelta } from "./format.js";
import type { EstimateResponse, ScenarioRecord } from "./types.js";
import type { ViewState } from "./state.js";

export interface CompareColumn {
  id: string;
  name: string;
  estimate: EstimateResponse | null;
}

export interface CompareRow {
  label: string;
  /** One display cell per column, in column order. */
  values: string[];
  /** Delta cell, present only for numeric rows with exactly two columns. */
  delta: string | null;
}

/** Effort figure of an estimate, whichever generation produced it. */
export function effortOf(estimate: EstimateResponse): number {
  return estimate.effort_pm ?? estimate.pm_adjusted ?? Number.NaN;
}

/** Selected scenarios in selection order, with their cached estimates. */
export function compareColumns(state: ViewState): CompareColumn[] {
  const byId = new Map<string, ScenarioRecord>(
    state.scenarios.map((record) => [record.id, record]),
  );
  const columns: CompareColumn[] = [];
  for (const id of state.selectedIds) {
    const record = byId.get(id);
    if (record === undefined) continue;
    columns.push({
      id,
      name: record.name,
      estimate: state.compareEstimates[id] ?? null,
    });
  }
  return columns;
}

interface MetricDef {
  label: string;
  value: (estimate: EstimateResponse) => number | string | undefined;
}

const METRICS: MetricDef[] = [
  {
    label: "variant",
    value: (e) => (e.mode !== undefined ? `${e.model} / ${e.mode}` : e.model),
  },
  { label: "size KLOC", value: (e) => e.size_kloc },
  { label: "effort PM", value: (e) => effortOf(e) },
  { label: "duration months", value: (e) => e.duration_months },
  { label: "avg staffing", value: (e) => e.avg_staffing },
  { label: "EAF", value: (e) => e.eaf },
];

/**
 * Table rows for the compare view. Columns without a fetched estimate yet
 * render a pending placeholder and suppress the delta.
 */
export function compareRows(columns: CompareColumn[]): CompareRow[] {
  return METRICS.map((metric) => {
    const raw = columns.map((column) =>
      column.estimate === null ? undefined : metric.value(column.estimate),
    );
    const values = raw.map((value) => {
      if (value === undefined) return "…";
      return typeof value === "number" ? fmt(value) : value;
    });
    let delta: string | null = null;
    if (columns.length === 2) {
      const [a, b] = raw;
      if (typeof a === "number" && typeof b === "number") {
        delta = fmtDelta(b - a);
      }
    }
    return { label: metric.label, values, delta };
  });
}
