/** Number formatting mirroring the CLI table renderer. */

/**
 * Round to two decimals, halves away from zero.
 *
 * The shift happens in the decimal domain (through the number's shortest
 * decimal representation), so binary noise like 1.005 being stored as
 * 1.00499... cannot defeat the rule.
 */
export function round2(value: number): number {
  if (!Number.isFinite(value)) return value;
  const sign = value < 0 ? -1 : 1;
  const shifted = Number(`${Math.abs(value)}e2`);
  return (sign * Math.round(shifted)) / 100;
}

/** Display form: two decimals, half away from zero. */
export function fmt(value: number): string {
  return round2(value).toFixed(2);
}

/** Display form with an explicit sign, for delta cells. */
export function fmtDelta(value: number): string {
  const rounded = round2(value);
  return rounded > 0 ? `+${rounded.toFixed(2)}` : rounded.toFixed(2);
}

/** "very_high" -> "very high" etc., for labels. */
export function ratingLabel(rating: string): string {
  return rating.replace(/_/g, " ");
}
