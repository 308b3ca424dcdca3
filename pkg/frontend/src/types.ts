/**
 * Wire types for the cocoest estimation service.
 *
 * These mirror the JSON bodies of /api/v1 exactly; the UI never computes
 * model figures itself, it only displays what these carry.
 */

export type ModelName =
  | "basic"
  | "intermediate"
  | "detailed"
  | "early_design"
  | "post_architecture";

export type ModeName = "organic" | "semidetached" | "embedded";

export type RatingName =
  | "very_low"
  | "low"
  | "nominal"
  | "high"
  | "very_high"
  | "extra_high";

export const RATING_ORDER: RatingName[] = [
  "very_low",
  "low",
  "nominal",
  "high",
  "very_high",
  "extra_high",
];

export const COCOMO1_MODELS: ModelName[] = ["basic", "intermediate", "detailed"];
export const COCOMO2_MODELS: ModelName[] = ["early_design", "post_architecture"];

/** Project description accepted by POST /api/v1/estimate. */
export interface SpecDoc {
  model: ModelName;
  mode?: ModeName;
  size_kloc: number;
  sced_percent?: number;
  drivers?: Record<string, RatingName>;
  scale_factors?: Record<string, RatingName>;
  size_category?: string;
}

export interface PhaseRow {
  phase: string;
  effort_fraction: number;
  schedule_fraction: number;
  effort_pm: number;
  schedule_months: number;
}

/**
 * Response of POST /api/v1/estimate. One shape covers all model variants;
 * fields absent for a variant are simply missing from the body.
 */
export interface EstimateResponse {
  model: ModelName;
  mode?: ModeName;
  size_kloc: number;
  eaf: number;
  duration_months: number;
  avg_staffing: number;
  effort_pm?: number;
  productivity_kloc_per_pm?: number;
  size_category?: string;
  phases?: PhaseRow[];
  sced_percent?: number;
  scale_exponent_b?: number;
  pm_nominal?: number;
  pm_adjusted?: number;
}

/** One row of POST /api/v1/sweep: an estimate at one rating of one driver. */
export interface SweepRow extends Omit<EstimateResponse, "phases"> {
  driver: string;
  rating: RatingName;
}

export interface DriverEntry {
  name: string;
  group: "product" | "computer" | "personnel" | "project";
  [rating: string]: string | number;
}

export interface ScaleFactorEntry {
  name: string;
  [rating: string]: string | number;
}

export interface CatalogResponse {
  catalog_version: string;
  calibration: unknown;
  effort_multipliers: Record<string, Record<string, DriverEntry>>;
  scale_factors: Record<string, ScaleFactorEntry>;
}

export interface ScenarioRecord {
  id: string;
  name: string;
  notes: string | null;
  created_at: string;
  spec: SpecDoc;
}

export interface ApiErrorBody {
  error: {
    code: string;
    message: string;
    field?: string;
  };
}

/** Ratings a driver entry actually defines, in canonical order. */
export function definedRatings(
  entry: DriverEntry | ScaleFactorEntry,
): RatingName[] {
  return RATING_ORDER.filter((rating) => typeof entry[rating] === "number");
}

/** Effort-multiplier family used by a model, or null for basic. */
export function familyForModel(model: ModelName): string | null {
  switch (model) {
    case "basic":
      return null;
    case "intermediate":
    case "detailed":
      return "cocomo81";
    case "early_design":
      return "cocomo2_early";
    case "post_architecture":
      return "cocomo2_post";
  }
}

export function isCocomo2(model: ModelName): boolean {
  return model === "early_design" || model === "post_architecture";
}
