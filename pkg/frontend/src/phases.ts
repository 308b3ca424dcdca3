/**
 * Stacked-bar geometry for the phase breakdown of a detailed estimate.
 *
 * Segment widths are layout proportions of the service-reported phase
 * amounts; every displayed figure (fraction, PM, months) is taken from the
 * response untouched.
 */

import { fmt } from "./format.js";
import type { PhaseRow } from "./types.js";

export interface PhaseSegment {
  phase: string;
  label: string;
  /** Share of the bar, percent of the summed phase amounts. */
  widthPct: number;
  /** Amount this segment represents, as reported by the service. */
  amount: number;
  /** Exact fraction from the response, shown in the tooltip. */
  fraction: number;
  tooltip: string;
}

export function phaseLabel(phase: string): string {
  return phase.replace(/_/g, " ");
}

export function phaseSegments(
  rows: PhaseRow[],
  kind: "effort" | "schedule",
): PhaseSegment[] {
  const amounts = rows.map((row) =>
    kind === "effort" ? row.effort_pm : row.schedule_months,
  );
  const total = amounts.reduce((acc, value) => acc + value, 0);
  const unit = kind === "effort" ? "PM" : "months";
  return rows.map((row, index) => {
    const amount = amounts[index] ?? 0;
    const fraction =
      kind === "effort" ? row.effort_fraction : row.schedule_fraction;
    const label = phaseLabel(row.phase);
    return {
      phase: row.phase,
      label,
      widthPct: total > 0 ? (amount / total) * 100 : 0,
      amount,
      fraction,
      tooltip: `${label}: fraction ${fraction}, ${fmt(amount)} ${unit}`,
    };
  });
}
