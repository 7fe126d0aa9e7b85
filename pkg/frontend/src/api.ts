/** Typed client for the coarray HTTP JSON API.
 *
 * The UI does no coarray math of its own: every number it displays comes
 * out of one of these payloads.
 */

export interface WeightEntry {
  lag: number;
  weight: number;
}

export interface WeightsPayload {
  positions: number[];
  n_sensors: number;
  aperture: number;
  entries: WeightEntry[];
  dca: number[];
  holes: number[];
  hole_free: boolean;
  central_ula_bound: number;
}

export interface FailureEntry {
  removed: number;
  holes: number[];
}

export interface ReportPayload {
  verdict: "NOT_DDB" | "DDB_WITH_HES" | "TRUE_2FRA";
  ddb: boolean;
  hes: number[];
  essential: number[];
  fragility: { num: number; den: number };
  failures: FailureEntry[];
}

export interface ScanRowPayload {
  n: number;
  positions: number[];
  verdict: string;
  hes: number[];
  aperture: number;
}

export interface ScanSummaryPayload {
  n_from: number;
  n_to: number;
  rows: number;
  with_hes: number;
  fraction_with_hes: { num: number; den: number };
  pattern_verified: boolean;
  first_violation: number | null;
}

export interface ScanPayload {
  rows: ScanRowPayload[];
  summary: ScanSummaryPayload | null;
}

export interface DoaResultPayload {
  failed: number[];
  grid: number[];
  spectrum_db: number[];
  peaks: number[];
  matched: [number, number][];
  missed: number[];
  ghosts: number[];
  rmse: number | null;
  k_sources: number;
  central_ula_bound: number;
}

export interface DoaRunPayload {
  scenario: {
    array: number[];
    sources: number[];
    snr_db: number;
    snapshots: number;
    seed: number;
    grid_step: number;
  };
  results: DoaResultPayload[];
}

export interface ErrorEnvelope {
  code: string;
  message: string;
  detail?: Record<string, unknown>;
}

/** Raised for any non-2xx response; carries the structured envelope. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly envelope: ErrorEnvelope,
  ) {
    super(envelope.message);
  }
}

async function request<T>(path: string, body?: unknown): Promise<T> {
  const response = await fetch(path, {
    method: body === undefined ? "GET" : "POST",
    headers: body === undefined ? {} : { "Content-Type": "application/json" },
    body: body === undefined ? undefined : JSON.stringify(body),
  });
  const payload = await response.json();
  if (!response.ok) {
    throw new ApiError(response.status, payload as ErrorEnvelope);
  }
  return payload as T;
}

export function fetchWeights(positions: string): Promise<WeightsPayload> {
  return request("/api/weights", { positions });
}

export function fetchAnalysis(positions: string): Promise<ReportPayload> {
  return request("/api/analyze", { positions });
}

export function fetchFamily(n: number): Promise<Record<string, unknown>> {
  return request(`/api/family/${n}`);
}

export function fetchScan(from: number, to: number): Promise<ScanPayload> {
  return request(`/api/scan?from=${from}&to=${to}`);
}

export interface DoaRequest {
  array: string;
  sources: number[];
  fail: number[][];
  snr_db?: number;
  snapshots?: number;
  seed?: number;
  grid_step?: number;
}

export function fetchDoa(body: DoaRequest): Promise<DoaRunPayload> {
  return request("/api/doa", body);
}
