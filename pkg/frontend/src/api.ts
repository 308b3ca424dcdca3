/** Thin fetch client for the estimation service. */

import type {
  ApiErrorBody,
  CatalogResponse,
  EstimateResponse,
  ScenarioRecord,
  SpecDoc,
  SweepRow,
} from "./types.js";

export class ApiError extends Error {
  readonly code: string;
  readonly field: string | null;
  readonly status: number;

  constructor(status: number, code: string, message: string, field?: string) {
    super(message);
    this.name = "ApiError";
    this.status = status;
    this.code = code;
    this.field = field ?? null;
  }
}

const STORAGE_KEY = "cocoest.base_url";

declare global {
  interface Window {
    /** Build-time default for the service base URL. */
    __COCOEST_BASE__?: string;
  }
}

/**
 * Service base URL: a runtime setting (localStorage) wins over the
 * build-time global; both default to same-origin.
 */
export function resolveBaseUrl(): string {
  try {
    const stored = window.localStorage?.getItem(STORAGE_KEY);
    if (stored) return stored.replace(/\/+$/, "");
  } catch {
    // Storage may be unavailable (private mode); fall through.
  }
  return (window.__COCOEST_BASE__ ?? "").replace(/\/+$/, "");
}

export function storeBaseUrl(url: string): void {
  try {
    if (url) window.localStorage.setItem(STORAGE_KEY, url);
    else window.localStorage.removeItem(STORAGE_KEY);
  } catch {
    // Best effort only.
  }
}

export class ApiClient {
  private readonly base: string;
  private readonly fetchImpl: typeof fetch;

  constructor(baseUrl = "", fetchImpl?: typeof fetch) {
    this.base = baseUrl.replace(/\/+$/, "");
    this.fetchImpl = fetchImpl ?? ((...args) => fetch(...args));
  }

  estimate(spec: SpecDoc): Promise<EstimateResponse> {
    return this.request<EstimateResponse>("POST", "/api/v1/estimate", spec);
  }

  catalog(): Promise<CatalogResponse> {
    return this.request<CatalogResponse>("GET", "/api/v1/catalog");
  }

  sweep(spec: SpecDoc, driver: string): Promise<SweepRow[]> {
    return this.request<SweepRow[]>("POST", "/api/v1/sweep", { spec, driver });
  }

  listScenarios(): Promise<ScenarioRecord[]> {
    return this.request<ScenarioRecord[]>("GET", "/api/v1/scenarios");
  }

  saveScenario(
    name: string,
    spec: SpecDoc,
    notes?: string,
  ): Promise<ScenarioRecord> {
    const body: Record<string, unknown> = { name, spec };
    if (notes !== undefined) body.notes = notes;
    return this.request<ScenarioRecord>("POST", "/api/v1/scenarios", body);
  }

  deleteScenario(id: string): Promise<void> {
    return this.request<void>("DELETE", `/api/v1/scenarios/${id}`);
  }

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
  ): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchImpl(`${this.base}${path}`, {
        method,
        headers: body === undefined ? {} : { "content-type": "application/json" },
        body: body === undefined ? undefined : JSON.stringify(body),
      });
    } catch (err) {
      throw new ApiError(
        0,
        "UNREACHABLE",
        `service unreachable: ${err instanceof Error ? err.message : String(err)}`,
      );
    }
    if (response.status === 204) return undefined as T;
    if (!response.ok) {
      let parsed: ApiErrorBody | null = null;
      try {
        parsed = (await response.json()) as ApiErrorBody;
      } catch {
        parsed = null;
      }
      if (parsed && parsed.error && typeof parsed.error.message === "string") {
        throw new ApiError(
          response.status,
          parsed.error.code,
          parsed.error.message,
          parsed.error.field,
        );
      }
      throw new ApiError(response.status, "INTERNAL", `HTTP ${response.status}`);
    }
    return (await response.json()) as T;
  }
}
