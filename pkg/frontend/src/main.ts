/** DOM wiring for the single-page UI.
 *
 * Layout mirrors the analysis workflow: an input panel with the two
 * actions (plot the weight function, run the 2FRA analysis), a failure
 * explorer for per-sensor what-ifs, the family scan table, and the DOA
 * comparison view. All math happens server-side; this file only moves
 * payloads into renderers.
 */

import {
  ApiError,
  fetchAnalysis,
  fetchDoa,
  fetchScan,
  fetchWeights,
} from "./api.js";
import {
  renderDoaSummary,
  renderError,
  renderFailureExplorer,
  renderScanTable,
  renderSpectraOverlay,
  renderStemPlot,
  renderVerdictCard,
  renderWeightsSummary,
} from "./render.js";
import { UISessionState } from "./state.js";

const state = new UISessionState();

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function showError(target: HTMLElement, err: unknown): void {
  if (err instanceof ApiError) {
    target.innerHTML = renderError(err.envelope);
  } else {
    target.innerHTML = renderError({
      code: "NETWORK_ERROR",
      message: `${err instanceof Error ? err.message : err} (is the service running?)`,
    });
  }
}

function currentInput(): string {
  return el<HTMLInputElement>("positions-input").value;
}

async function onPlotWeights(): Promise<void> {
  state.setInput(currentInput());
  const token = state.beginRequest("weights");
  const plot = el("weights-panel");
  try {
    const weights = await fetchWeights(state.inputText);
    if (!state.acceptResponse("weights", token)) return;
    state.weights = weights;
    plot.innerHTML =
      renderWeightsSummary(weights) + renderStemPlot(weights);
    renderExplorer();
  } catch (err) {
    if (state.acceptResponse("weights", token)) showError(plot, err);
  }
}

async function onAnalyze(): Promise<void> {
  state.setInput(currentInput());
  const token = state.beginRequest("analyze");
  const card = el("verdict-panel");
  try {
    const report = await fetchAnalysis(state.inputText);
    if (!state.acceptResponse("analyze", token)) return;
    state.report = report;
    card.innerHTML = renderVerdictCard(report);
    renderExplorer();
  } catch (err) {
    if (state.acceptResponse("analyze", token)) showError(card, err);
  }
}

function renderExplorer(): void {
  const panel = el("explorer-panel");
  if (!state.weights || !state.report || !state.report.ddb) {
    panel.innerHTML = state.report && !state.report.ddb
      ? `<p class="sweep-note">Failure exploration needs a double difference baseline.</p>`
      : "";
    return;
  }
  panel.innerHTML = renderFailureExplorer(
    state.weights,
    state.report,
    state.selectedFailure,
  );
  for (const btn of panel.querySelectorAll<HTMLButtonElement>("[data-sensor]")) {
    btn.addEventListener("click", () =>
      onExploreSensor(Number(btn.dataset.sensor)),
    );
  }
}

async function onExploreSensor(sensor: number): Promise<void> {
  if (!state.weights) return;
  const token = state.beginRequest("explorer");
  const plot = el("weights-panel");
  const survivors = state.weights.positions.filter((p) => p !== sensor);
  try {
    const faulty = await fetchWeights(`[${survivors.join(" ")}]`);
    if (!state.acceptResponse("explorer", token)) return;
    state.selectedFailure = sensor;
    state.faultyWeights = faulty;
    plot.innerHTML =
      renderWeightsSummary(faulty) +
      renderStemPlot(faulty, {
        highlightLags: faulty.holes,
        title: `Weight function after failing sensor ${sensor}` +
          (faulty.holes.length
            ? ` (holes at ±{${faulty.holes.join(", ")}})`
            : " (coarray intact)"),
      });
    renderExplorer();
  } catch (err) {
    if (state.acceptResponse("explorer", token)) showError(plot, err);
  }
}

async function onScan(): Promise<void> {
  const from = Number(el<HTMLInputElement>("scan-from").value);
  const to = Number(el<HTMLInputElement>("scan-to").value);
  const token = state.beginRequest("scan");
  const panel = el("scan-panel");
  panel.innerHTML = `<p class="sweep-note">Scanning N = ${from}..${to}&hellip;</p>`;
  try {
    const scan = await fetchScan(from, to);
    if (!state.acceptResponse("scan", token)) return;
    state.scan = scan;
    panel.innerHTML = renderScanTable(scan);
  } catch (err) {
    if (state.acceptResponse("scan", token)) showError(panel, err);
  }
}

function parseFailSets(text: string): number[][] {
  return text
    .split(";")
    .map((chunk) => chunk.trim())
    .filter((chunk) => chunk.length > 0)
    .map((chunk) =>
      chunk.toLowerCase() === "none"
        ? []
        : chunk.split(/[\s,]+/).filter(Boolean).map(Number),
    );
}

async function onDoa(): Promise<void> {
  const token = state.beginRequest("doa");
  const panel = el("doa-panel");
  const sources = el<HTMLInputElement>("doa-sources")
    .value.split(/[\s,]+/)
    .filter(Boolean)
    .map(Number);
  const failSets = parseFailSets(el<HTMLInputElement>("doa-fail").value);
  panel.innerHTML = `<p class="sweep-note">Simulating&hellip;</p>`;
  try {
    const run = await fetchDoa({
      array: el<HTMLInputElement>("doa-array").value,
      sources,
      fail: failSets.length ? failSets : [[]],
      grid_step: 0.1,
      seed: Number(el<HTMLInputElement>("doa-seed").value) || 0,
    });
    if (!state.acceptResponse("doa", token)) return;
    state.doaRun = run;
    panel.innerHTML = renderDoaSummary(run) + renderSpectraOverlay(run);
  } catch (err) {
    if (state.acceptResponse("doa", token)) showError(panel, err);
  }
}

function wire(): void {
  el("plot-btn").addEventListener("click", () => void onPlotWeights());
  el("analyze-btn").addEventListener("click", () => void onAnalyze());
  el("scan-btn").addEventListener("click", () => void onScan());
  el("doa-btn").addEventListener("click", () => void onDoa());
  el<HTMLInputElement>("positions-input").addEventListener("input", () => {
    state.setInput(currentInput());
  });
}

document.addEventListener("DOMContentLoaded", wire);
