/**
 * Session state for the what-if console.
 *
 * All displayed figures come from service responses held here; the UI layer
 * renders this state and never computes estimation arithmetic itself.
 * Requests carry a monotonically increasing token, and a response is applied
 * only if no newer request has been issued since, so out-of-order replies
 * can never overwrite fresher numbers.
 */

import { ApiClient, ApiError } from "./api.js";
import { debounce, type Debounced } from "./debounce.js";
import type {
  EstimateResponse,
  ScenarioRecord,
  SpecDoc,
  SweepRow,
} from "./types.js";

export const DEBOUNCE_MS = 250;
export const MAX_COMPARE = 4;

export const DEFAULT_SPEC: SpecDoc = {
  model: "basic",
  mode: "organic",
  size_kloc: 32,
};

export interface ViewState {
  /** Spec currently under edit; exactly what gets posted to /estimate. */
  spec: SpecDoc;
  /** Last estimate applied (kept, greyed, while `stale` after a failure). */
  estimate: EstimateResponse | null;
  /** Sweep rows for the focused driver, or null when none is focused. */
  sweep: SweepRow[] | null;
  focusedDriver: string | null;
  scenarios: ScenarioRecord[];
  /** Scenario ids picked for the compare view, at most MAX_COMPARE. */
  selectedIds: string[];
  /** Estimates fetched for compared scenarios, keyed by scenario id. */
  compareEstimates: Record<string, EstimateResponse>;
  /** True while a request for the current spec is outstanding. */
  pending: boolean;
  /** True when the shown numbers no longer match the edited spec. */
  stale: boolean;
  error: string | null;
}

type Listener = (state: ViewState) => void;

function describeError(err: unknown): string {
  if (err instanceof ApiError) return `${err.code}: ${err.message}`;
  return err instanceof Error ? err.message : String(err);
}

export class EstimateSession {
  private readonly client: ApiClient;
  private readonly view: ViewState;
  private readonly listeners = new Set<Listener>();
  private readonly scheduleRefresh: Debounced<[]>;
  private lastToken = 0;

  constructor(client: ApiClient, waitMs: number = DEBOUNCE_MS) {
    this.client = client;
    this.view = {
      spec: structuredClone(DEFAULT_SPEC),
      estimate: null,
      sweep: null,
      focusedDriver: null,
      scenarios: [],
      selectedIds: [],
      compareEstimates: {},
      pending: false,
      stale: false,
      error: null,
    };
    this.scheduleRefresh = debounce(() => {
      void this.refresh();
    }, waitMs);
  }

  get state(): ViewState {
    return this.view;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.add(listener);
    return () => {
      this.listeners.delete(listener);
    };
  }

  private notify(): void {
    for (const listener of this.listeners) listener(this.view);
  }

  /** Initial load: saved scenarios plus an estimate of the default spec. */
  async init(): Promise<void> {
    await Promise.all([this.refreshScenarios(), this.refresh()]);
  }

  /**
   * Edit the spec. The previous numbers stay on screen marked stale until
   * the debounced re-estimate lands, so a burst of edits costs one request.
   */
  updateSpec(mutate: (spec: SpecDoc) => void): void {
    const next = structuredClone(this.view.spec);
    mutate(next);
    this.view.spec = next;
    this.view.pending = true;
    this.view.stale = true;
    this.notify();
    this.scheduleRefresh();
  }

  /** Focus a driver for the sweep chart (null clears it). */
  focusDriver(driver: string | null): void {
    if (this.view.focusedDriver === driver) return;
    this.view.focusedDriver = driver;
    if (driver === null) {
      this.view.sweep = null;
      this.notify();
      return;
    }
    this.view.pending = true;
    this.notify();
    this.scheduleRefresh();
  }

  /** Run the pending (or a fresh) refresh immediately. */
  refreshNow(): void {
    this.scheduleRefresh.cancel();
    void this.refresh();
  }

  private async refresh(): Promise<void> {
    const token = ++this.lastToken;
    const spec = this.view.spec;
    const driver =
      spec.model !== "basic" ? this.view.focusedDriver : null;
    this.view.pending = true;
    this.notify();

    const estimatePromise = this.client.estimate(spec);
    const sweepPromise = driver ? this.client.sweep(spec, driver) : null;

    let failure: string | null = null;
    try {
      const estimate = await estimatePromise;
      if (token === this.lastToken) {
        this.view.estimate = estimate;
        this.view.stale = false;
        this.view.error = null;
      }
    } catch (err) {
      failure = describeError(err);
    }

    if (sweepPromise !== null) {
      try {
        const rows = await sweepPromise;
        if (token === this.lastToken) this.view.sweep = rows;
      } catch (err) {
        if (failure === null) failure = describeError(err);
        if (token === this.lastToken) this.view.sweep = null;
      }
    } else if (token === this.lastToken && this.view.focusedDriver === null) {
      this.view.sweep = null;
    }

    if (token === this.lastToken) {
      this.view.pending = false;
      if (failure !== null) {
        this.view.error = failure;
        this.view.stale = this.view.estimate !== null;
      }
    }
    this.notify();
  }

  async refreshScenarios(): Promise<void> {
    try {
      this.view.scenarios = await this.client.listScenarios();
    } catch (err) {
      this.view.error = describeError(err);
    }
    this.notify();
  }

  /** Save the current spec under `name`; returns the record, or null on failure. */
  async saveScenario(
    name: string,
    notes?: string,
  ): Promise<ScenarioRecord | null> {
    try {
      const record = await this.client.saveScenario(name, this.view.spec, notes);
      this.view.scenarios = [record, ...this.view.scenarios];
      this.notify();
      return record;
    } catch (err) {
      this.view.error = describeError(err);
      this.notify();
      return null;
    }
  }

  async deleteScenario(id: string): Promise<void> {
    try {
      await this.client.deleteScenario(id);
    } catch (err) {
      this.view.error = describeError(err);
      this.notify();
      return;
    }
    this.view.scenarios = this.view.scenarios.filter((s) => s.id !== id);
    this.view.selectedIds = this.view.selectedIds.filter((sid) => sid !== id);
    delete this.view.compareEstimates[id];
    this.notify();
  }

  /** Replace the edited spec with a saved scenario's and re-estimate now. */
  loadScenario(record: ScenarioRecord): void {
    this.view.spec = structuredClone(record.spec);
    this.view.focusedDriver = null;
    this.view.sweep = null;
    this.view.pending = true;
    this.view.stale = true;
    this.notify();
    this.refreshNow();
  }

  /**
   * Add or remove a scenario from the compare selection. Estimates for
   * selected scenarios come from the service and are cached per id.
   * Returns false when the selection is already at MAX_COMPARE.
   */
  async toggleCompare(id: string): Promise<boolean> {
    if (this.view.selectedIds.includes(id)) {
      this.view.selectedIds = this.view.selectedIds.filter((s) => s !== id);
      this.notify();
      return true;
    }
    if (this.view.selectedIds.length >= MAX_COMPARE) return false;
    const record = this.view.scenarios.find((s) => s.id === id);
    if (record === undefined) return false;
    this.view.selectedIds = [...this.view.selectedIds, id];
    this.notify();
    if (!(id in this.view.compareEstimates)) {
      try {
        this.view.compareEstimates[id] = await this.client.estimate(
          record.spec,
        );
      } catch (err) {
        this.view.selectedIds = this.view.selectedIds.filter((s) => s !== id);
        this.view.error = describeError(err);
      }
      this.notify();
    }
    return true;
  }
}
