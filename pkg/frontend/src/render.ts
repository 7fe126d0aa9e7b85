/** Pure renderers: payload in, markup string out.
 *
 * Everything here is deterministic and DOM-free so the contract tests can
 * run against recorded API fixtures in plain node. main.ts assigns the
 * returned strings to innerHTML.
 */

import type {
  DoaRunPayload,
  ErrorEnvelope,
  ReportPayload,
  ScanPayload,
  WeightsPayload,
} from "./api.js";

const VERDICT_SENTENCES: Record<ReportPayload["verdict"], string> = {
  NOT_DDB: "No coarray redundancy: not eligible for failure analysis.",
  DDB_WITH_HES:
    "Double difference baseline with hidden dependencies: not a true 2FRA.",
  TRUE_2FRA:
    "True two-fold redundancy: survives any single interior sensor failure.",
};

const SERIES_COLORS = ["#1f6fb2", "#2a9d5c", "#d1495b", "#8a5cc0", "#c88719"];
const SPECTRUM_FLOOR_DB = -50;
const TICK_SPACING_LAGS = 10;

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function fmt(x: number): string {
  return x.toFixed(2);
}

/** Stem plot of a weight function; holes of a faulty overlay are flagged
 * at +-lag with dashed marker lines (class "hole-mark"). */
export function renderStemPlot(
  weights: WeightsPayload,
  options: { highlightLags?: number[]; title?: string } = {},
): string {
  const width = 860;
  const height = 380;
  const margin = { left: 50, right: 16, top: 34, bottom: 44 };
  const plotW = width - margin.left - margin.right;
  const plotH = height - margin.top - margin.bottom;
  const L = weights.aperture;
  const maxW = Math.max(1, ...weights.entries.map((e) => e.weight));
  const xOf = (lag: number) => margin.left + ((lag + L) / (2 * L || 1)) * plotW;
  const yOf = (w: number) => margin.top + plotH - (w / (maxW * 1.08)) * plotH;
  const baseline = yOf(0);

  const parts: string[] = [];
  parts.push(
    `<svg viewBox="0 0 ${width} ${height}" role="img" class="stem-plot">`,
  );
  const title = options.title ?? `Weight function (L = ${L})`;
  parts.push(
    `<text x="${width / 2}" y="18" text-anchor="middle" class="plot-title">` +
      `${escapeHtml(title)}</text>`,
  );

  const xticks = new Set<number>([-L, 0, L]);
  for (let t = -L; t <= L; t++) {
    if (t % TICK_SPACING_LAGS === 0) xticks.add(t);
  }
  for (const t of [...xticks].sort((a, b) => a - b)) {
    parts.push(
      `<line x1="${fmt(xOf(t))}" y1="${margin.top}" x2="${fmt(xOf(t))}" ` +
        `y2="${margin.top + plotH}" class="grid"/>`,
    );
    parts.push(
      `<text x="${fmt(xOf(t))}" y="${margin.top + plotH + 16}" ` +
        `text-anchor="middle" class="tick">${t}</text>`,
    );
  }
  const yStep = Math.max(1, Math.round(maxW / 6));
  for (let w = 0; w <= maxW; w += yStep) {
    parts.push(
      `<line x1="${margin.left}" y1="${fmt(yOf(w))}" ` +
        `x2="${margin.left + plotW}" y2="${fmt(yOf(w))}" class="grid"/>`,
    );
    parts.push(
      `<text x="${margin.left - 6}" y="${fmt(yOf(w) + 4)}" ` +
        `text-anchor="end" class="tick">${w}</text>`,
    );
  }

  for (const lag of options.highlightLags ?? []) {
    for (const signed of new Set([lag, -lag])) {
      parts.push(
        `<line x1="${fmt(xOf(signed))}" y1="${margin.top}" ` +
          `x2="${fmt(xOf(signed))}" y2="${margin.top + plotH}" ` +
          `class="hole-mark" data-lag="${signed}"/>`,
      );
    }
  }

  for (const entry of weights.entries) {
    if (entry.weight === 0) continue;
    const x = fmt(xOf(entry.lag));
    parts.push(
      `<line x1="${x}" y1="${fmt(baseline)}" x2="${x}" ` +
        `y2="${fmt(yOf(entry.weight))}" class="stem" data-lag="${entry.lag}"/>`,
    );
    parts.push(
      `<circle cx="${x}" cy="${fmt(yOf(entry.weight))}" r="2.6" class="stem-dot"/>`,
    );
  }

  parts.push(
    `<line x1="${margin.left}" y1="${fmt(baseline)}" ` +
      `x2="${margin.left + plotW}" y2="${fmt(baseline)}" class="axis"/>`,
  );
  parts.push(
    `<line x1="${margin.left}" y1="${margin.top}" x2="${margin.left}" ` +
      `y2="${margin.top + plotH}" class="axis"/>`,
  );
  parts.push(
    `<text x="${width / 2}" y="${height - 8}" text-anchor="middle" ` +
      `class="axis-label">Spatial lag</text>`,
  );
  parts.push("</svg>");
  return parts.join("");
}

export function renderWeightsSummary(weights: WeightsPayload): string {
  const holes = weights.hole_free
    ? `hole-free (all ${2 * weights.aperture + 1} lags present)`
    : `holes at &plusmn;{${weights.holes.join(", ")}}`;
  return (
    `<dl class="weights-summary">` +
    `<dt>Array</dt><dd>[${weights.positions.join(" ")}]</dd>` +
    `<dt>Sensors</dt><dd>${weights.n_sensors}</dd>` +
    `<dt>Aperture</dt><dd>${weights.aperture}</dd>` +
    `<dt>Coarray</dt><dd>${holes}</dd>` +
    `<dt>Central ULA</dt><dd>[-${weights.central_ula_bound}, ${weights.central_ula_bound}]</dd>` +
    `</dl>`
  );
}

export function renderVerdictCard(report: ReportPayload): string {
  const cls = report.verdict.toLowerCase();
  const hes = report.hes.length
    ? `{${report.hes.join(", ")}}`
    : "none detected";
  const fragility = `${report.fragility.num}/${report.fragility.den}`;
  const rows = report.failures
    .map((f) => {
      const effect = f.holes.length
        ? `holes at {${f.holes.join(", ")}}`
        : "coarray intact";
      return (
        `<tr class="${f.holes.length ? "breaks" : ""}">` +
        `<td>${f.removed}</td><td>${effect}</td></tr>`
      );
    })
    .join("");
  const sweep = report.failures.length
    ? `<table class="sweep-table"><thead><tr><th>failed sensor</th>` +
      `<th>effect</th></tr></thead><tbody>${rows}</tbody></table>`
    : `<p class="sweep-note">Failure sweep skipped: array discarded before analysis.</p>`;
  return (
    `<div class="verdict-card verdict-${cls}">` +
    `<h3>${report.verdict}</h3>` +
    `<p class="verdict-sentence">${VERDICT_SENTENCES[report.verdict]}</p>` +
    `<dl><dt>Hidden essential sensors</dt><dd class="hes-list">${hes}</dd>` +
    `<dt>Essential sensors</dt><dd>{${report.essential.join(", ")}}</dd>` +
    `<dt>Fragility</dt><dd>${fragility}</dd></dl>` +
    sweep +
    `</div>`
  );
}

/** Clickable per-sensor what-if strip. Interior sensors request a faulty
 * re-plot; edge sensors are disabled (their removal always alters the
 * coarray span). HES positions are visually flagged. */
export function renderFailureExplorer(
  weights: WeightsPayload,
  report: ReportPayload,
  selected: number | null,
): string {
  const L = weights.aperture;
  const buttons = weights.positions
    .map((p) => {
      const edge = p === 0 || p === L;
      const classes = ["sensor-btn"];
      if (report.hes.includes(p)) classes.push("hes");
      if (p === selected) classes.push("selected");
      const attrs = edge
        ? `disabled title="Edge sensor: removal always alters the coarray span"`
        : `data-sensor="${p}"`;
      return `<button class="${classes.join(" ")}" ${attrs}>${p}</button>`;
    })
    .join("");
  return (
    `<div class="failure-explorer"><p>Click an interior sensor to preview ` +
    `its failure; flagged sensors are hidden essential.</p>` +
    `<div class="sensor-strip">${buttons}</div></div>`
  );
}

export function renderScanTable(scan: ScanPayload): string {
  const rows = scan.rows
    .map((row) => {
      const hes = row.hes.length ? `{${row.hes.join(", ")}}` : "Nil";
      const positions = `[${row.positions.join(" ")}]`;
      return (
        `<tr class="${row.hes.length ? "has-hes" : "no-hes"}">` +
        `<td>${row.n}</td>` +
        `<td class="positions">${positions}</td>` +
        `<td>${row.verdict}</td>` +
        `<td class="hes-cell">${hes}</td>` +
        `<td>${row.aperture}</td></tr>`
      );
    })
    .join("");
  let summary = "";
  if (scan.summary) {
    const s = scan.summary;
    const frac = `${s.fraction_with_hes.num}/${s.fraction_with_hes.den}`;
    const pattern = s.pattern_verified
      ? "4-on/4-off pattern verified"
      : `pattern violated at N = ${s.first_violation}`;
    summary =
      `<p class="scan-summary">${s.with_hes} of ${s.rows} members carry an ` +
      `HES (${frac}); ${pattern}.</p>`;
  }
  return (
    `<table class="scan-table"><thead><tr><th>N</th><th>positions</th>` +
    `<th>verdict</th><th>HES</th><th>L</th></tr></thead>` +
    `<tbody>${rows}</tbody></table>` +
    summary
  );
}

export function renderSpectraOverlay(run: DoaRunPayload): string {
  const width = 860;
  const height = 420;
  const margin = { left: 50, right: 16, top: 34, bottom: 44 };
  const plotW = width - margin.left - margin.right;
  const plotH = height - margin.top - margin.bottom;
  const xOf = (angle: number) => margin.left + ((angle + 90) / 180) * plotW;
  const yOf = (db: number) =>
    margin.top + ((0 - Math.max(db, SPECTRUM_FLOOR_DB)) / -SPECTRUM_FLOOR_DB) * plotH;

  const parts: string[] = [];
  parts.push(`<svg viewBox="0 0 ${width} ${height}" role="img" class="spectra">`);
  parts.push(
    `<text x="${width / 2}" y="18" text-anchor="middle" class="plot-title">` +
      `Coarray MUSIC pseudospectra</text>`,
  );
  for (let a = -80; a <= 80; a += 20) {
    parts.push(
      `<line x1="${fmt(xOf(a))}" y1="${margin.top}" x2="${fmt(xOf(a))}" ` +
        `y2="${margin.top + plotH}" class="grid"/>`,
    );
    parts.push(
      `<text x="${fmt(xOf(a))}" y="${margin.top + plotH + 16}" ` +
        `text-anchor="middle" class="tick">${a}</text>`,
    );
  }
  for (let db = 0; db >= SPECTRUM_FLOOR_DB; db -= 10) {
    parts.push(
      `<line x1="${margin.left}" y1="${fmt(yOf(db))}" ` +
        `x2="${margin.left + plotW}" y2="${fmt(yOf(db))}" class="grid"/>`,
    );
    parts.push(
      `<text x="${margin.left - 6}" y="${fmt(yOf(db) + 4)}" text-anchor="end" ` +
        `class="tick">${db}</text>`,
    );
  }
  for (const angle of run.scenario.sources) {
    parts.push(
      `<line x1="${fmt(xOf(angle))}" y1="${margin.top}" ` +
        `x2="${fmt(xOf(angle))}" y2="${margin.top + plotH}" class="truth" ` +
        `data-angle="${angle}"/>`,
    );
  }
  run.results.forEach((result, i) => {
    const color = SERIES_COLORS[i % SERIES_COLORS.length];
    const points = result.grid
      .map((a, j) => `${fmt(xOf(a))},${fmt(yOf(result.spectrum_db[j]))}`)
      .join(" ");
    parts.push(
      `<polyline class="series" fill="none" stroke="${color}" points="${points}"/>`,
    );
    const label = result.failed.length
      ? `fail {${result.failed.join(", ")}}`
      : "healthy";
    const ly = margin.top + 14 + 15 * i;
    parts.push(
      `<line x1="${margin.left + plotW - 150}" y1="${ly - 4}" ` +
        `x2="${margin.left + plotW - 124}" y2="${ly - 4}" stroke="${color}" ` +
        `stroke-width="2"/>`,
    );
    parts.push(
      `<text x="${margin.left + plotW - 118}" y="${ly}" class="tick">` +
        `${escapeHtml(label)}</text>`,
    );
  });
  parts.push(
    `<text x="${width / 2}" y="${height - 8}" text-anchor="middle" ` +
      `class="axis-label">Angle (degrees)</text>`,
  );
  parts.push("</svg>");
  return parts.join("");
}

export function renderDoaSummary(run: DoaRunPayload): string {
  const rows = run.results
    .map((r) => {
      const label = r.failed.length ? `fail {${r.failed.join(", ")}}` : "healthy";
      const rmse = r.rmse === null ? "n/a" : `${r.rmse.toFixed(3)}&deg;`;
      return (
        `<tr class="${r.missed.length + r.ghosts.length ? "degraded" : "clean"}">` +
        `<td>${escapeHtml(label)}</td>` +
        `<td>${r.matched.length}/${run.scenario.sources.length}</td>` +
        `<td>${r.missed.length}</td><td>${r.ghosts.length}</td>` +
        `<td>${rmse}</td><td>${r.central_ula_bound}</td></tr>`
      );
    })
    .join("");
  return (
    `<table class="doa-table"><thead><tr><th>case</th><th>matched</th>` +
    `<th>missed</th><th>ghosts</th><th>rmse</th><th>virtual ULA bound</th>` +
    `</tr></thead><tbody>${rows}</tbody></table>`
  );
}

export function renderError(envelope: ErrorEnvelope): string {
  return (
    `<div class="error-box" role="alert"><strong>${escapeHtml(envelope.code)}` +
    `</strong> ${escapeHtml(envelope.message)}</div>`
  );
}
