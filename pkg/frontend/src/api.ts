/**
 * Typed client for the engine's HTTP API. Framework-free so both the
 * browser UI and the node test-runner can use it.
 */

export interface EdgeInfo {
  name: string;
  u: string;
  v: string;
}

export interface GraphInfo {
  id: string;
  vertices: string[];
  edges: EdgeInfo[];
}

export type WeightMap = Record<string, number>;

export interface WireMove {
  vertex: string;
  removals: Record<string, number>;
}

export interface ClassifierResult {
  verdict: "Winning" | "Losing" | "Unknown";
  rule: string;
  trace: Record<string, unknown> | string | null;
}

export interface Analysis {
  graph: string;
  weights: WeightMap;
  oracle: "Winning" | "Losing";
  classifier: ClassifierResult | null;
  optimal_move: WireMove | null;
}

export interface HistoryEntry {
  by: "human" | "engine";
  move: WireMove;
}

export interface SessionState {
  session: string;
  graph: string;
  weights: WeightMap;
  turn: "human" | "engine";
  game_over: boolean;
  winner: "human" | "engine" | null;
  history: HistoryEntry[];
  engine_move: WireMove | null;
  analysis: Analysis;
}

/** Error body the service sends with non-2xx statuses. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, init);
  const body = await response.json().catch(() => null);
  if (!response.ok) {
    const code = body && typeof body.error === "string" ? body.error : "http_error";
    const message =
      body && typeof body.message === "string" ? body.message : response.statusText;
    throw new ApiError(response.status, code, message);
  }
  return body as T;
}

function post(payload: unknown): RequestInit {
  return {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(payload),
  };
}

export class ApiClient {
  constructor(readonly base: string = "") {}

  graphs(): Promise<GraphInfo[]> {
    return request(`${this.base}/api/graphs`);
  }

  analyze(graph: string, weights: WeightMap): Promise<Analysis> {
    return request(`${this.base}/api/analyze`, post({ graph, weights }));
  }

  newSession(
    graph: string,
    weights: WeightMap,
    first: "human" | "engine",
  ): Promise<SessionState> {
    return request(`${this.base}/api/session`, post({ graph, weights, first }));
  }

  getSession(id: string): Promise<SessionState> {
    return request(`${this.base}/api/session/${id}`);
  }

  playMove(id: string, move: WireMove): Promise<SessionState> {
    return request(`${this.base}/api/session/${id}/move`, post(move));
  }

  whatif(id: string, move: WireMove): Promise<Analysis> {
    return request(`${this.base}/api/session/${id}/whatif`, post(move));
  }
}
