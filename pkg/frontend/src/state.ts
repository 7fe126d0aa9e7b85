/** Session state: one parsed array drives the plot, verdict, and explorer.
 *
 * Editing the input clears every derived result so panels can never show
 * numbers from different arrays. Each panel tracks a request token; stale
 * responses (an older request resolving after a newer one) are discarded.
 */

import type { DoaRunPayload, ReportPayload, ScanPayload, WeightsPayload } from "./api.js";

export type Panel = "weights" | "analyze" | "scan" | "doa" | "explorer";

export class UISessionState {
  inputText = "";
  weights: WeightsPayload | null = null;
  report: ReportPayload | null = null;
  selectedFailure: number | null = null;
  faultyWeights: WeightsPayload | null = null;
  scan: ScanPayload | null = null;
  doaRun: DoaRunPayload | null = null;

  private tokens: Record<Panel, number> = {
    weights: 0,
    analyze: 0,
    scan: 0,
    doa: 0,
    explorer: 0,
  };

  /** Update the input text; any change invalidates derived results. */
  setInput(text: string): void {
    if (text === this.inputText) return;
    this.inputText = text;
    this.weights = null;
    this.report = null;
    this.selectedFailure = null;
    this.faultyWeights = null;
    // scan and DOA panels have their own inputs and are left alone
  }

  /** Start a request for a panel; only the most recent token may land. */
  beginRequest(panel: Panel): number {
    this.tokens[panel] += 1;
    return this.tokens[panel];
  }

  /** True if this response is current and should be applied. */
  acceptResponse(panel: Panel, token: number): boolean {
    return this.tokens[panel] === token;
  }
}
