/**
 * Board view model: all client-side game state and draft-move legality,
 * with no DOM or network dependencies so it can be unit-tested directly.
 *
 * Invariants maintained here:
 *  - draft removals never exceed the displayed edge weights;
 *  - a draft is submittable only when its total removal is >= 1;
 *  - displayed weights always come verbatim from the last server state.
 */

import type {
  Analysis,
  EdgeInfo,
  GraphInfo,
  HistoryEntry,
  SessionState,
  WeightMap,
  WireMove,
} from "./api.js";

export class BoardViewModel {
  readonly graph: GraphInfo;
  weights: WeightMap;
  sessionId: string | null = null;
  turn: "human" | "engine" = "human";
  gameOver = false;
  winner: "human" | "engine" | null = null;
  history: HistoryEntry[] = [];
  analysis: Analysis | null = null;
  lastEngineMove: WireMove | null = null;
  /** What-if overlay for the current draft, null when none is shown. */
  preview: Analysis | null = null;

  selectedVertex: string | null = null;
  draftRemovals: Record<string, number> = {};

  constructor(graph: GraphInfo, weights?: WeightMap) {
    this.graph = graph;
    this.weights = { ...(weights ?? {}) };
    for (const edge of graph.edges) {
      if (!(edge.name in this.weights)) this.weights[edge.name] = 1;
    }
  }

  /** Adopt a server response as the single source of truth. */
  applySession(state: SessionState): void {
    this.sessionId = state.session;
    this.weights = { ...state.weights };
    this.turn = state.turn;
    this.gameOver = state.game_over;
    this.winner = state.winner;
    this.history = state.history;
    this.analysis = state.analysis;
    this.lastEngineMove = state.engine_move ?? this.lastEngineMove;
    this.clearDraft();
  }

  incidentEdges(vertex: string): EdgeInfo[] {
    return this.graph.edges.filter((e) => e.u === vertex || e.v === vertex);
  }

  selectVertex(vertex: string | null): void {
    if (vertex !== null && !this.graph.vertices.includes(vertex)) return;
    this.selectedVertex = vertex;
    this.draftRemovals = {};
    this.preview = null;
  }

  /**
   * Set a draft removal amount, clamped into [0, current weight]; ignored
   * for edges not incident on the selected vertex.
   */
  setRemoval(edgeName: string, amount: number): void {
    if (this.selectedVertex === null) return;
    const incident = this.incidentEdges(this.selectedVertex).some(
      (e) => e.name === edgeName,
    );
    if (!incident) return;
    const weight = this.weights[edgeName] ?? 0;
    const clamped = Math.max(0, Math.min(weight, Math.floor(amount)));
    if (clamped === 0) {
      delete this.draftRemovals[edgeName];
    } else {
      this.draftRemovals[edgeName] = clamped;
    }
    this.preview = null;
  }

  draftTotal(): number {
    return Object.values(this.draftRemovals).reduce((a, b) => a + b, 0);
  }

  /** Mirror of the server's move legality for the current draft. */
  draftLegal(): boolean {
    if (this.gameOver || this.turn !== "human") return false;
    if (this.selectedVertex === null) return false;
    if (this.draftTotal() < 1) return false;
    for (const [name, amount] of Object.entries(this.draftRemovals)) {
      if (amount < 0 || amount > (this.weights[name] ?? 0)) return false;
    }
    return true;
  }

  draftMove(): WireMove | null {
    if (!this.draftLegal() || this.selectedVertex === null) return null;
    return { vertex: this.selectedVertex, removals: { ...this.draftRemovals } };
  }

  clearDraft(): void {
    this.selectedVertex = null;
    this.draftRemovals = {};
    this.preview = null;
  }

  /** Weights after the draft would be applied (for rendering the dial). */
  draftedWeight(edgeName: string): number {
    return (this.weights[edgeName] ?? 0) - (this.draftRemovals[edgeName] ?? 0);
  }

  /** "H1-L-B1" style rule when the classifier decided, else "search". */
  verdictProvenance(): string {
    if (!this.analysis) return "";
    const classifier = this.analysis.classifier;
    if (classifier && classifier.verdict !== "Unknown") return classifier.rule;
    return "search";
  }

  statusLine(): string {
    if (this.gameOver) {
      return this.winner === "human" ? "Game over: you win!" : "Game over: engine wins.";
    }
    if (!this.analysis) return "";
    const who = this.turn === "human" ? "you" : "engine";
    return `${this.analysis.oracle} for ${who} (${this.verdictProvenance()})`;
  }
}
