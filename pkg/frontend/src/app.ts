/**
 * DOM wiring for the what-if console.
 *
 * `initApp` builds the page skeleton inside a root element, connects form
 * events to an EstimateSession, and re-renders on every state change. All
 * figures shown come from the session's last service responses.
 */

import { ApiClient, resolveBaseUrl, storeBaseUrl } from "./api.js";
import { compareColumns, compareRows, effortOf } from "./compare.js";
import { fmt, ratingLabel } from "./format.js";
import { phaseSegments } from "./phases.js";
import { EstimateSession, type ViewState } from "./state.js";
import {
  COCOMO1_MODELS,
  COCOMO2_MODELS,
  definedRatings,
  familyForModel,
  isCocomo2,
  type CatalogResponse,
  type ModeName,
  type ModelName,
  type RatingName,
} from "./types.js";

const GROUP_ORDER = ["product", "computer", "personnel", "project"] as const;

const MODE_NAMES: ModeName[] = ["organic", "semidetached", "embedded"];

const METRIC_ROWS: Array<[string, string]> = [
  ["variant", "variant"],
  ["effort_pm", "effort (PM)"],
  ["duration_months", "duration (months)"],
  ["avg_staffing", "avg staffing"],
  ["productivity_kloc_per_pm", "productivity (KLOC/PM)"],
  ["eaf", "EAF"],
  ["scale_exponent_b", "scale exponent B"],
  ["pm_nominal", "nominal PM"],
  ["size_category", "size category"],
];

function skeleton(): string {
  const modelOptions = [...COCOMO1_MODELS, ...COCOMO2_MODELS]
    .map((m) => `<option value="${m}">${m.replace(/_/g, " ")}</option>`)
    .join("");
  const modeOptions = MODE_NAMES.map(
    (m) => `<option value="${m}">${m}</option>`,
  ).join("");
  const metricRows = METRIC_ROWS.map(
    ([name, label]) =>
      `<div class="metric" data-row="${name}"><dt>${label}</dt>` +
      `<dd data-metric="${name}">–</dd></div>`,
  ).join("");
  return `
<header class="topbar">
  <h1>cocoest console</h1>
  <div class="base-url">
    <label>service <input id="base-url" placeholder="same origin"></label>
    <button id="apply-base-url" type="button">apply</button>
  </div>
</header>
<div id="error-banner" class="banner" hidden>
  <span id="error-text"></span>
  <button id="retry" type="button">retry</button>
</div>
<main class="columns">
  <section class="card" id="spec-form">
    <h2>Project</h2>
    <label class="field">model <select id="model-select">${modelOptions}</select></label>
    <label class="field" id="mode-row">mode <select id="mode-select">${modeOptions}</select></label>
    <label class="field">size (KLOC) <input id="size-input" type="number" min="0" step="any"></label>
    <label class="field" id="sced-row" hidden>schedule (SCED %) <input id="sced-input" type="number" step="any"></label>
    <div id="drivers"></div>
    <div id="scale-factors"></div>
  </section>
  <section class="card" id="results">
    <h2>Estimate</h2>
    <dl id="estimate-panel">${metricRows}</dl>
    <div id="phase-chart"></div>
    <div id="sweep-panel"></div>
  </section>
  <section class="card" id="scenarios">
    <h2>Scenarios</h2>
    <div class="save-row">
      <input id="scenario-name" placeholder="scenario name">
      <button id="save-scenario" type="button">save</button>
    </div>
    <ul id="scenario-list"></ul>
    <h2>Compare</h2>
    <div id="compare-view"></div>
  </section>
</main>`;
}

function must<T extends HTMLElement>(root: HTMLElement, selector: string): T {
  const el = root.querySelector<T>(selector);
  if (el === null) throw new Error(`missing element ${selector}`);
  return el;
}

export async function initApp(
  root: HTMLElement,
  client: ApiClient,
): Promise<EstimateSession> {
  root.innerHTML = skeleton();

  const banner = must<HTMLElement>(root, "#error-banner");
  const errorText = must<HTMLElement>(root, "#error-text");
  const retryBtn = must<HTMLButtonElement>(root, "#retry");
  const baseUrlInput = must<HTMLInputElement>(root, "#base-url");
  const applyBaseUrl = must<HTMLButtonElement>(root, "#apply-base-url");
  const modelSelect = must<HTMLSelectElement>(root, "#model-select");
  const modeRow = must<HTMLElement>(root, "#mode-row");
  const modeSelect = must<HTMLSelectElement>(root, "#mode-select");
  const sizeInput = must<HTMLInputElement>(root, "#size-input");
  const scedRow = must<HTMLElement>(root, "#sced-row");
  const scedInput = must<HTMLInputElement>(root, "#sced-input");
  const driversDiv = must<HTMLElement>(root, "#drivers");
  const scaleFactorsDiv = must<HTMLElement>(root, "#scale-factors");
  const estimatePanel = must<HTMLElement>(root, "#estimate-panel");
  const phaseChart = must<HTMLElement>(root, "#phase-chart");
  const sweepPanel = must<HTMLElement>(root, "#sweep-panel");
  const scenarioName = must<HTMLInputElement>(root, "#scenario-name");
  const saveBtn = must<HTMLButtonElement>(root, "#save-scenario");
  const scenarioList = must<HTMLElement>(root, "#scenario-list");
  const compareView = must<HTMLElement>(root, "#compare-view");

  baseUrlInput.value = resolveBaseUrl();

  let catalog: CatalogResponse | null = null;
  let catalogError: string | null = null;
  let builtControlsKey = "";

  const session = new EstimateSession(client);

  async function loadCatalog(): Promise<void> {
    try {
      catalog = await client.catalog();
      catalogError = null;
      builtControlsKey = "";
    } catch (err) {
      catalogError = `catalog unavailable: ${
        err instanceof Error ? err.message : String(err)
      }`;
    }
    render(session.state);
  }

  function setMetric(name: string, text: string | null): void {
    const row = estimatePanel.querySelector<HTMLElement>(
      `[data-row="${name}"]`,
    );
    const cell = estimatePanel.querySelector<HTMLElement>(
      `[data-metric="${name}"]`,
    );
    if (row === null || cell === null) return;
    row.hidden = text === null;
    cell.textContent = text ?? "–";
  }

  function numText(value: number): string {
    return Number.isNaN(value) ? "–" : fmt(value);
  }

  function renderEstimate(state: ViewState): void {
    estimatePanel.classList.toggle("stale", state.stale);
    estimatePanel.classList.toggle("pending", state.pending);
    const est = state.estimate;
    if (est === null) {
      for (const [name] of METRIC_ROWS) {
        const core = [
          "variant",
          "effort_pm",
          "duration_months",
          "avg_staffing",
          "eaf",
        ].includes(name);
        setMetric(name, core ? "–" : null);
      }
      return;
    }
    setMetric(
      "variant",
      est.mode !== undefined ? `${est.model} / ${est.mode}` : est.model,
    );
    setMetric("effort_pm", numText(effortOf(est)));
    setMetric("duration_months", numText(est.duration_months));
    setMetric("avg_staffing", numText(est.avg_staffing));
    setMetric(
      "productivity_kloc_per_pm",
      est.productivity_kloc_per_pm === undefined
        ? null
        : numText(est.productivity_kloc_per_pm),
    );
    setMetric("eaf", numText(est.eaf));
    setMetric(
      "scale_exponent_b",
      est.scale_exponent_b === undefined ? null : numText(est.scale_exponent_b),
    );
    setMetric(
      "pm_nominal",
      est.pm_nominal === undefined ? null : numText(est.pm_nominal),
    );
    setMetric("size_category", est.size_category ?? null);
  }

  function renderPhases(state: ViewState): void {
    phaseChart.innerHTML = "";
    const phases = state.estimate?.phases;
    if (phases === undefined) return;
    for (const kind of ["effort", "schedule"] as const) {
      const heading = document.createElement("h3");
      heading.textContent = kind === "effort" ? "phase effort" : "phase schedule";
      phaseChart.appendChild(heading);
      const bar = document.createElement("div");
      bar.className = "phase-bar";
      const segments = phaseSegments(phases, kind);
      segments.forEach((segment, index) => {
        const div = document.createElement("div");
        div.className = `phase-seg seg-${index}`;
        div.style.width = `${segment.widthPct}%`;
        div.title = segment.tooltip;
        bar.appendChild(div);
      });
      phaseChart.appendChild(bar);
      const legend = document.createElement("ul");
      legend.className = "phase-legend";
      const unit = kind === "effort" ? "PM" : "months";
      segments.forEach((segment, index) => {
        const item = document.createElement("li");
        item.className = `seg-${index}`;
        item.textContent =
          `${segment.label}: ${fmt(segment.amount)} ${unit} ` +
          `(fraction ${segment.fraction})`;
        legend.appendChild(item);
      });
      phaseChart.appendChild(legend);
    }
  }

  function renderSweep(state: ViewState): void {
    sweepPanel.innerHTML = "";
    const driver = state.focusedDriver;
    if (driver === null || state.sweep === null) return;
    const heading = document.createElement("h3");
    heading.textContent = `sweep: ${driver}`;
    sweepPanel.appendChild(heading);
    const table = document.createElement("table");
    const thead = document.createElement("thead");
    const headRow = document.createElement("tr");
    for (const text of ["rating", "effort PM", "duration months"]) {
      const th = document.createElement("th");
      th.textContent = text;
      headRow.appendChild(th);
    }
    thead.appendChild(headRow);
    table.appendChild(thead);
    const tbody = document.createElement("tbody");
    const current = state.spec.drivers?.[driver] ?? "nominal";
    for (const row of state.sweep) {
      const tr = document.createElement("tr");
      if (row.rating === current) tr.className = "current";
      const cells = [
        ratingLabel(row.rating),
        fmt(effortOf(row)),
        fmt(row.duration_months),
      ];
      for (const text of cells) {
        const td = document.createElement("td");
        td.textContent = text;
        tr.appendChild(td);
      }
      tbody.appendChild(tr);
    }
    table.appendChild(tbody);
    sweepPanel.appendChild(table);
  }

  function renderScenarios(state: ViewState): void {
    scenarioList.innerHTML = "";
    const atCap =
      state.selectedIds.length >= 4;
    for (const record of state.scenarios) {
      const li = document.createElement("li");
      li.dataset.id = record.id;

      const name = document.createElement("span");
      name.className = "name";
      name.textContent = record.name;
      li.appendChild(name);

      const meta = document.createElement("span");
      meta.className = "meta";
      meta.textContent = `${record.spec.model} · ${record.spec.size_kloc} KLOC`;
      li.appendChild(meta);

      const load = document.createElement("button");
      load.type = "button";
      load.textContent = "load";
      load.dataset.action = "load";
      load.dataset.id = record.id;
      li.appendChild(load);

      const compareLabel = document.createElement("label");
      const checkbox = document.createElement("input");
      checkbox.type = "checkbox";
      checkbox.dataset.action = "compare";
      checkbox.dataset.id = record.id;
      checkbox.checked = state.selectedIds.includes(record.id);
      checkbox.disabled = atCap && !checkbox.checked;
      compareLabel.appendChild(checkbox);
      compareLabel.appendChild(document.createTextNode(" compare"));
      li.appendChild(compareLabel);

      const del = document.createElement("button");
      del.type = "button";
      del.textContent = "delete";
      del.dataset.action = "delete";
      del.dataset.id = record.id;
      li.appendChild(del);

      scenarioList.appendChild(li);
    }
  }

  function renderCompare(state: ViewState): void {
    compareView.innerHTML = "";
    const columns = compareColumns(state);
    if (columns.length === 0) {
      const p = document.createElement("p");
      p.className = "placeholder";
      p.textContent = "select scenarios above to compare them.";
      compareView.appendChild(p);
      return;
    }
    const table = document.createElement("table");
    const thead = document.createElement("thead");
    const headRow = document.createElement("tr");
    const corner = document.createElement("th");
    corner.textContent = "metric";
    headRow.appendChild(corner);
    for (const column of columns) {
      const th = document.createElement("th");
      th.textContent = column.name;
      headRow.appendChild(th);
    }
    const withDelta = columns.length === 2;
    if (withDelta) {
      const th = document.createElement("th");
      th.textContent = "Δ";
      headRow.appendChild(th);
    }
    thead.appendChild(headRow);
    table.appendChild(thead);
    const tbody = document.createElement("tbody");
    for (const row of compareRows(columns)) {
      const tr = document.createElement("tr");
      const label = document.createElement("td");
      label.textContent = row.label;
      tr.appendChild(label);
      for (const value of row.values) {
        const td = document.createElement("td");
        td.textContent = value;
        tr.appendChild(td);
      }
      if (withDelta) {
        const td = document.createElement("td");
        td.className = "delta";
        td.textContent = row.delta ?? "";
        tr.appendChild(td);
      }
      tbody.appendChild(tr);
    }
    table.appendChild(tbody);
    compareView.appendChild(table);
  }

  function buildDriverControls(model: ModelName): void {
    const family = familyForModel(model);
    const key = `${family ?? "none"}|${catalog === null ? "nocat" : "cat"}`;
    if (key === builtControlsKey) return;
    builtControlsKey = key;
    driversDiv.innerHTML = "";
    scaleFactorsDiv.innerHTML = "";
    if (family === null) {
      const note = document.createElement("p");
      note.className = "note";
      note.textContent = "the basic model uses mode and size only.";
      driversDiv.appendChild(note);
      return;
    }
    if (catalog === null) {
      const note = document.createElement("p");
      note.className = "note";
      note.textContent = "driver catalog unavailable.";
      driversDiv.appendChild(note);
      return;
    }
    const drivers = catalog.effort_multipliers[family] ?? {};
    for (const group of GROUP_ORDER) {
      const ids = Object.keys(drivers).filter(
        (id) => drivers[id]?.group === group,
      );
      if (ids.length === 0) continue;
      const fieldset = document.createElement("fieldset");
      const legend = document.createElement("legend");
      legend.textContent = group;
      fieldset.appendChild(legend);
      for (const id of ids) {
        const entry = drivers[id];
        if (entry === undefined) continue;
        const label = document.createElement("label");
        label.className = "driver";
        const span = document.createElement("span");
        span.textContent = id;
        span.title = entry.name;
        label.appendChild(span);
        const select = document.createElement("select");
        select.dataset.driver = id;
        for (const rating of definedRatings(entry)) {
          const option = document.createElement("option");
          option.value = rating;
          option.textContent = ratingLabel(rating);
          if (rating === "nominal") option.selected = true;
          select.appendChild(option);
        }
        label.appendChild(select);
        fieldset.appendChild(label);
      }
      driversDiv.appendChild(fieldset);
    }
    if (isCocomo2(model)) {
      const fieldset = document.createElement("fieldset");
      const legend = document.createElement("legend");
      legend.textContent = "scale factors";
      fieldset.appendChild(legend);
      for (const [id, entry] of Object.entries(catalog.scale_factors)) {
        const label = document.createElement("label");
        label.className = "driver";
        const span = document.createElement("span");
        span.textContent = id;
        span.title = entry.name;
        label.appendChild(span);
        const select = document.createElement("select");
        select.dataset.sf = id;
        for (const rating of definedRatings(entry)) {
          const option = document.createElement("option");
          option.value = rating;
          option.textContent = ratingLabel(rating);
          if (rating === "nominal") option.selected = true;
          select.appendChild(option);
        }
        label.appendChild(select);
        fieldset.appendChild(label);
      }
      scaleFactorsDiv.appendChild(fieldset);
    }
  }

  function syncNumberInput(input: HTMLInputElement, value: number | undefined): void {
    if (document.activeElement === input) return;
    input.value = value !== undefined && Number.isFinite(value) ? String(value) : "";
  }

  function syncSelections(state: ViewState): void {
    for (const select of driversDiv.querySelectorAll<HTMLSelectElement>(
      "select[data-driver]",
    )) {
      const id = select.dataset.driver;
      if (id === undefined) continue;
      select.value = state.spec.drivers?.[id] ?? "nominal";
    }
    for (const select of scaleFactorsDiv.querySelectorAll<HTMLSelectElement>(
      "select[data-sf]",
    )) {
      const id = select.dataset.sf;
      if (id === undefined) continue;
      select.value = state.spec.scale_factors?.[id] ?? "nominal";
    }
  }

  function render(state: ViewState): void {
    if (modelSelect.value !== state.spec.model) {
      modelSelect.value = state.spec.model;
    }
    const cocomo2 = isCocomo2(state.spec.model);
    modeRow.hidden = cocomo2;
    if (!cocomo2 && state.spec.mode !== undefined) {
      modeSelect.value = state.spec.mode;
    }
    scedRow.hidden = !cocomo2;
    syncNumberInput(sizeInput, state.spec.size_kloc);
    if (cocomo2) syncNumberInput(scedInput, state.spec.sced_percent ?? 100);
    buildDriverControls(state.spec.model);
    syncSelections(state);

    const message = state.error ?? catalogError;
    banner.hidden = message === null;
    errorText.textContent = message ?? "";

    renderEstimate(state);
    renderPhases(state);
    renderSweep(state);
    renderScenarios(state);
    renderCompare(state);
  }

  modelSelect.addEventListener("change", () => {
    const model = modelSelect.value as ModelName;
    session.focusDriver(null);
    session.updateSpec((spec) => {
      spec.model = model;
      delete spec.drivers;
      delete spec.scale_factors;
      delete spec.size_category;
      if (isCocomo2(model)) {
        delete spec.mode;
        if (spec.sced_percent === undefined) spec.sced_percent = 100;
      } else {
        if (spec.mode === undefined) spec.mode = "organic";
        delete spec.sced_percent;
      }
    });
  });

  modeSelect.addEventListener("change", () => {
    const mode = modeSelect.value as ModeName;
    session.updateSpec((spec) => {
      spec.mode = mode;
    });
  });

  sizeInput.addEventListener("input", () => {
    const value = Number.parseFloat(sizeInput.value);
    session.updateSpec((spec) => {
      spec.size_kloc = value;
    });
  });

  scedInput.addEventListener("input", () => {
    const value = Number.parseFloat(scedInput.value);
    session.updateSpec((spec) => {
      spec.sced_percent = value;
    });
  });

  driversDiv.addEventListener("change", (event) => {
    const target = event.target;
    if (!(target instanceof HTMLSelectElement)) return;
    const id = target.dataset.driver;
    if (id === undefined) return;
    const rating = target.value as RatingName;
    session.updateSpec((spec) => {
      spec.drivers = { ...(spec.drivers ?? {}), [id]: rating };
    });
    session.focusDriver(id);
  });

  scaleFactorsDiv.addEventListener("change", (event) => {
    const target = event.target;
    if (!(target instanceof HTMLSelectElement)) return;
    const id = target.dataset.sf;
    if (id === undefined) return;
    const rating = target.value as RatingName;
    session.updateSpec((spec) => {
      spec.scale_factors = { ...(spec.scale_factors ?? {}), [id]: rating };
    });
  });

  saveBtn.addEventListener("click", () => {
    const name = scenarioName.value.trim();
    void session.saveScenario(name).then((record) => {
      if (record !== null) scenarioName.value = "";
    });
  });

  scenarioList.addEventListener("click", (event) => {
    const target = event.target;
    if (!(target instanceof HTMLElement)) return;
    const action = target.dataset.action;
    const id = target.dataset.id;
    if (action === undefined || id === undefined) return;
    if (action === "load") {
      const record = session.state.scenarios.find((s) => s.id === id);
      if (record !== undefined) session.loadScenario(record);
    } else if (action === "delete") {
      void session.deleteScenario(id);
    }
  });

  scenarioList.addEventListener("change", (event) => {
    const target = event.target;
    if (!(target instanceof HTMLInputElement)) return;
    if (target.dataset.action !== "compare") return;
    const id = target.dataset.id;
    if (id === undefined) return;
    void session.toggleCompare(id);
  });

  retryBtn.addEventListener("click", () => {
    if (catalog === null) void loadCatalog();
    void session.refreshScenarios();
    session.refreshNow();
  });

  applyBaseUrl.addEventListener("click", () => {
    storeBaseUrl(baseUrlInput.value.trim());
    window.location.reload();
  });

  session.subscribe(render);
  await loadCatalog();
  await session.init();
  return session;
}
