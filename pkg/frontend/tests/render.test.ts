/** Contract tests: recorded API fixtures must render without error and the
 * markup must display exactly the values carried by the payloads. The
 * fixtures were captured verbatim from the running service.
 */

import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";

import type {
  DoaRunPayload,
  ReportPayload,
  ScanPayload,
  WeightsPayload,
} from "../src/api.js";
import {
  escapeHtml,
  renderDoaSummary,
  renderError,
  renderFailureExplorer,
  renderScanTable,
  renderSpectraOverlay,
  renderStemPlot,
  renderVerdictCard,
  renderWeightsSummary,
} from "../src/render.js";

function loadFixture<T>(name: string): T {
  const url = new URL(`./fixtures/${name}`, import.meta.url);
  return JSON.parse(readFileSync(url, "utf-8")) as T;
}

const weightsMisc = loadFixture<WeightsPayload>("weights_misc.json");
const analyzeMisc = loadFixture<ReportPayload>("analyze_misc.json");
const analyzeTfra9 = loadFixture<ReportPayload>("analyze_tfra9.json");
const weightsTfra9 = loadFixture<WeightsPayload>("weights_tfra9.json");
const weightsTfra9Without6 = loadFixture<WeightsPayload>(
  "weights_tfra9_without6.json",
);
const scanTable = loadFixture<ScanPayload>("scan_6_30.json");
const doaRun = loadFixture<DoaRunPayload>("doa_3way.json");

describe("weight-function stem plot", () => {
  it("renders one stem per present lag of the hole-free array", () => {
    const svg = renderStemPlot(weightsMisc);
    const stems = svg.match(/class="stem"/g) ?? [];
    const presentLags = weightsMisc.entries.filter((e) => e.weight > 0);
    expect(presentLags).toHaveLength(27);
    expect(stems).toHaveLength(27);
  });

  it("annotates stems with their payload lags", () => {
    const svg = renderStemPlot(weightsMisc);
    for (const entry of weightsMisc.entries) {
      if (entry.weight > 0) {
        expect(svg).toContain(`data-lag="${entry.lag}"`);
      }
    }
  });

  it("summary displays the payload values", () => {
    const html = renderWeightsSummary(weightsMisc);
    expect(html).toContain(`[${weightsMisc.positions.join(" ")}]`);
    expect(html).toContain(`<dd>${weightsMisc.n_sensors}</dd>`);
    expect(html).toContain(`<dd>${weightsMisc.aperture}</dd>`);
    expect(html).toContain("hole-free (all 27 lags present)");
  });

  it("is deterministic for the same fixture", () => {
    expect(renderStemPlot(weightsMisc)).toEqual(renderStemPlot(weightsMisc));
  });
});

describe("verdict cards", () => {
  it("MISC array: not eligible banner", () => {
    const html = renderVerdictCard(analyzeMisc);
    expect(html).toContain("NOT_DDB");
    expect(html).toContain("not eligible for failure analysis");
    expect(html).toContain("Failure sweep skipped");
  });

  it("9-element member: HES at 6 with the payload's fragility", () => {
    const html = renderVerdictCard(analyzeTfra9);
    expect(html).toContain("DDB_WITH_HES");
    expect(html).toContain(`{${analyzeTfra9.hes.join(", ")}}`);
    expect(html).toContain(
      `${analyzeTfra9.fragility.num}/${analyzeTfra9.fragility.den}`,
    );
    // the sweep row for sensor 6 shows its residual hole
    expect(html).toContain("<td>6</td><td>holes at {6}</td>");
  });
});

describe("failure explorer", () => {
  it("flags the HES sensor and disables the edges", () => {
    const html = renderFailureExplorer(weightsTfra9, analyzeTfra9, null);
    expect(html).toContain(`class="sensor-btn hes" data-sensor="6"`);
    expect(html).toMatch(/<button class="sensor-btn" disabled[^>]*>0<\/button>/);
    expect(html).toMatch(/<button class="sensor-btn" disabled[^>]*>16<\/button>/);
  });

  it("clicking sensor 6 highlights the lag-6 hole on both sides", () => {
    // the click handler re-plots the faulty weights with holes highlighted
    expect(weightsTfra9Without6.holes).toEqual([6]);
    const svg = renderStemPlot(weightsTfra9Without6, {
      highlightLags: weightsTfra9Without6.holes,
    });
    expect(svg).toContain(`class="hole-mark" data-lag="6"`);
    expect(svg).toContain(`class="hole-mark" data-lag="-6"`);
    // no stem remains at the missing lag
    expect(svg).not.toContain(`class="stem" data-lag="6"`);
  });

  it("marks the selected sensor", () => {
    const html = renderFailureExplorer(weightsTfra9, analyzeTfra9, 6);
    expect(html).toContain(`class="sensor-btn hes selected" data-sensor="6"`);
  });
});

describe("family scan table", () => {
  it("renders every fixture row with its exact values", () => {
    const html = renderScanTable(scanTable);
    expect(scanTable.rows).toHaveLength(25);
    for (const row of scanTable.rows) {
      expect(html).toContain(`<td>${row.n}</td>`);
      expect(html).toContain(`[${row.positions.join(" ")}]`);
      if (row.hes.length) {
        expect(html).toContain(`{${row.hes.join(", ")}}`);
      }
    }
  });

  it("marks HES rows and Nil rows distinctly", () => {
    const html = renderScanTable(scanTable);
    const withHes = scanTable.rows.filter((r) => r.hes.length).length;
    expect(html.match(/class="has-hes"/g) ?? []).toHaveLength(withHes);
    expect(html.match(/>Nil</g) ?? []).toHaveLength(25 - withHes);
  });

  it("shows the periodicity summary from the payload", () => {
    const html = renderScanTable(scanTable);
    const s = scanTable.summary!;
    expect(html).toContain(
      `${s.with_hes} of ${s.rows} members carry an HES`,
    );
    expect(html).toContain("4-on/4-off pattern verified");
  });
});

describe("DOA comparison view", () => {
  it("overlays one series per failure set with truth markers", () => {
    const svg = renderSpectraOverlay(doaRun);
    expect(svg.match(/class="series"/g) ?? []).toHaveLength(3);
    expect(svg.match(/class="truth"/g) ?? []).toHaveLength(11);
    expect(svg).toContain("healthy");
    expect(svg).toContain("fail {17}");
    expect(svg).toContain("fail {16}");
  });

  it("summary table reflects the payload's match bookkeeping", () => {
    const html = renderDoaSummary(doaRun);
    for (const result of doaRun.results) {
      expect(html).toContain(
        `<td>${result.matched.length}/${doaRun.scenario.sources.length}</td>`,
      );
    }
    // healthy and non-HES rows are clean; the HES row is degraded
    expect(html.match(/class="clean"/g) ?? []).toHaveLength(2);
    expect(html.match(/class="degraded"/g) ?? []).toHaveLength(1);
  });

  it("is deterministic for the same fixture", () => {
    expect(renderSpectraOverlay(doaRun)).toEqual(renderSpectraOverlay(doaRun));
  });
});

describe("error rendering", () => {
  it("escapes envelope content", () => {
    const html = renderError({
      code: "DUPLICATE_POSITIONS",
      message: 'duplicate position(s) <4> & "more"',
    });
    expect(html).toContain("DUPLICATE_POSITIONS");
    expect(html).toContain("&lt;4&gt; &amp; &quot;more&quot;");
  });

  it("escapeHtml covers the metacharacters", () => {
    expect(escapeHtml(`<a href="x">&</a>`)).toBe(
      "&lt;a href=&quot;x&quot;&gt;&amp;&lt;/a&gt;",
    );
  });
});
