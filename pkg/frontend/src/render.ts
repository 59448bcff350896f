/**
 * SVG board rendering and the control/analysis panels. All reads go
 * through the view model; all mutations go through callbacks supplied by
 * main.ts.
 */

import type { BoardViewModel } from "./model.js";
import { LAYOUTS } from "./layouts.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface RenderCallbacks {
  onSelectVertex(vertex: string): void;
  onSetRemoval(edge: string, amount: number): void;
  onPreview(): void;
  onSubmit(): void;
}

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) el.setAttribute(k, String(v));
  return el;
}

export function renderBoard(
  svg: SVGSVGElement,
  model: BoardViewModel,
  callbacks: RenderCallbacks,
): void {
  svg.replaceChildren();
  const layout = LAYOUTS[model.graph.id];
  if (!layout) return;

  for (const edge of model.graph.edges) {
    const a = layout[edge.u];
    const b = layout[edge.v];
    if (!a || !b) continue;
    const weight = model.weights[edge.name] ?? 0;
    const removal = model.draftRemovals[edge.name] ?? 0;
    const line = svgEl("line", {
      x1: a.x, y1: a.y, x2: b.x, y2: b.y,
      class: `edge ${weight === 0 ? "edge-empty" : ""} ${removal > 0 ? "edge-draft" : ""}`,
    });
    svg.appendChild(line);
    const midX = (a.x + b.x) / 2;
    const midY = (a.y + b.y) / 2;
    const label = svgEl("text", {
      x: midX, y: midY - 1.5, class: "edge-label", "text-anchor": "middle",
    });
    label.textContent = removal > 0 ? `${weight}−${removal}` : `${weight}`;
    svg.appendChild(label);
  }

  for (const vertex of model.graph.vertices) {
    const p = layout[vertex];
    if (!p) continue;
    const selected = model.selectedVertex === vertex;
    const group = svgEl("g", { class: "vertex-group" });
    const circle = svgEl("circle", {
      cx: p.x, cy: p.y, r: 4.2,
      class: `vertex ${selected ? "vertex-selected" : ""}`,
    });
    circle.addEventListener("click", () => callbacks.onSelectVertex(vertex));
    group.appendChild(circle);
    const text = svgEl("text", {
      x: p.x, y: p.y + 1.4, class: "vertex-label", "text-anchor": "middle",
    });
    text.textContent = vertex;
    text.addEventListener("click", () => callbacks.onSelectVertex(vertex));
    group.appendChild(text);
    svg.appendChild(group);
  }
}

export function renderControls(
  container: HTMLElement,
  model: BoardViewModel,
  callbacks: RenderCallbacks,
): void {
  container.replaceChildren();
  if (model.gameOver) {
    return;
  }
  if (model.selectedVertex === null) {
    const hint = document.createElement("p");
    hint.className = "hint";
    hint.textContent = model.turn === "human"
      ? "Click a vertex, then dial how much to remove from each of its edges."
      : "Engine to move…";
    container.appendChild(hint);
    return;
  }

  const title = document.createElement("p");
  title.textContent = `Removing at vertex ${model.selectedVertex}:`;
  container.appendChild(title);

  for (const edge of model.incidentEdges(model.selectedVertex)) {
    const row = document.createElement("div");
    row.className = "dial-row";
    const weight = model.weights[edge.name] ?? 0;
    const label = document.createElement("label");
    label.textContent = `${edge.name} (have ${weight})`;
    const input = document.createElement("input");
    input.type = "number";
    input.min = "0";
    input.max = String(weight);
    input.value = String(model.draftRemovals[edge.name] ?? 0);
    input.dataset.edge = edge.name;
    input.addEventListener("input", () => {
      callbacks.onSetRemoval(edge.name, Number(input.value || "0"));
    });
    row.append(label, input);
    container.appendChild(row);
  }

  const actions = document.createElement("div");
  actions.className = "actions";
  const preview = document.createElement("button");
  preview.id = "preview";
  preview.textContent = "Preview";
  preview.disabled = !model.draftLegal();
  preview.addEventListener("click", callbacks.onPreview);
  const submit = document.createElement("button");
  submit.id = "submit";
  submit.textContent = `Remove ${model.draftTotal()}`;
  submit.disabled = !model.draftLegal();
  submit.addEventListener("click", callbacks.onSubmit);
  actions.append(preview, submit);
  container.appendChild(actions);

  if (model.preview) {
    const overlay = document.createElement("p");
    overlay.className = "preview-overlay";
    const rule =
      model.preview.classifier && model.preview.classifier.verdict !== "Unknown"
        ? model.preview.classifier.rule
        : "search";
    overlay.textContent =
      `after this move the opponent is ${model.preview.oracle} (${rule})`;
    container.appendChild(overlay);
  }
}

export function renderStatus(container: HTMLElement, model: BoardViewModel): void {
  container.replaceChildren();
  const banner = document.createElement("p");
  banner.className = model.gameOver ? "banner game-over" : "banner";
  banner.textContent = model.statusLine();
  container.appendChild(banner);

  if (model.analysis?.classifier) {
    const trace = document.createElement("p");
    trace.className = "trace";
    const c = model.analysis.classifier;
    const extra =
      c.trace && typeof c.trace === "object"
        ? " " + JSON.stringify(c.trace)
        : "";
    trace.textContent = `classifier: ${c.verdict} via ${c.rule}${extra}`;
    container.appendChild(trace);
  }

  const history = document.createElement("ol");
  history.className = "history";
  for (const entry of model.history) {
    const item = document.createElement("li");
    const removals = Object.entries(entry.move.removals)
      .map(([edge, amount]) => `${edge}:${amount}`)
      .join(", ");
    item.textContent = `${entry.by} @ ${entry.move.vertex} (${removals})`;
    history.appendChild(item);
  }
  container.appendChild(history);
}
