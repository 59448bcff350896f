/**
 * Entry point: wires the setup form, the SVG board, and the API client.
 * One in-flight mutation at a time; previews are last-write-wins.
 */

import { ApiClient, ApiError, type GraphInfo, type WeightMap } from "./api.js";
import { BoardViewModel } from "./model.js";
import { renderBoard, renderControls, renderStatus, type RenderCallbacks } from "./render.js";

const api = new ApiClient("");

let graphs: GraphInfo[] = [];
let model: BoardViewModel | null = null;
let busy = false;
let previewToken = 0;

const el = {
  graphSelect: document.getElementById("graph-select") as HTMLSelectElement,
  weightsForm: document.getElementById("weights-form") as HTMLElement,
  firstSelect: document.getElementById("first-select") as HTMLSelectElement,
  startButton: document.getElementById("start") as HTMLButtonElement,
  formError: document.getElementById("form-error") as HTMLElement,
  board: document.getElementById("board") as unknown as SVGSVGElement,
  controls: document.getElementById("controls") as HTMLElement,
  status: document.getElementById("status") as HTMLElement,
};

function selectedGraph(): GraphInfo {
  const id = el.graphSelect.value;
  const graph = graphs.find((g) => g.id === id);
  if (!graph) throw new Error(`unknown graph ${id}`);
  return graph;
}

function readWeightsForm(): WeightMap {
  const weights: WeightMap = {};
  for (const input of el.weightsForm.querySelectorAll("input")) {
    weights[input.dataset.edge as string] = Number(input.value || "0");
  }
  return weights;
}

function renderWeightsForm(): void {
  el.weightsForm.replaceChildren();
  for (const edge of selectedGraph().edges) {
    const label = document.createElement("label");
    label.textContent = edge.name;
    const input = document.createElement("input");
    input.type = "number";
    input.min = "1";
    input.value = "2";
    input.dataset.edge = edge.name;
    label.appendChild(input);
    el.weightsForm.appendChild(label);
  }
}

function showFormError(message: string): void {
  el.formError.textContent = message;
}

function redraw(): void {
  if (!model) return;
  renderBoard(el.board, model, callbacks);
  renderControls(el.controls, model, callbacks);
  renderStatus(el.status, model);
}

async function withBusy(action: () => Promise<void>): Promise<void> {
  if (busy) return;
  busy = true;
  try {
    await action();
  } catch (err) {
    if (err instanceof ApiError) showFormError(`${err.code}: ${err.message}`);
    else showFormError(String(err));
  } finally {
    busy = false;
    redraw();
  }
}

const callbacks: RenderCallbacks = {
  onSelectVertex(vertex) {
    if (!model || model.gameOver || model.turn !== "human") return;
    model.selectVertex(model.selectedVertex === vertex ? null : vertex);
    redraw();
  },
  onSetRemoval(edge, amount) {
    model?.setRemoval(edge, amount);
    // Keep focus in the input; only refresh board + action buttons.
    if (model) {
      renderBoard(el.board, model, callbacks);
      const submit = document.getElementById("submit") as HTMLButtonElement | null;
      const preview = document.getElementById("preview") as HTMLButtonElement | null;
      if (submit) {
        submit.disabled = !model.draftLegal();
        submit.textContent = `Remove ${model.draftTotal()}`;
      }
      if (preview) preview.disabled = !model.draftLegal();
    }
  },
  onPreview() {
    const m = model;
    const move = m?.draftMove();
    if (!m || !m.sessionId || !move) return;
    const token = ++previewToken;
    api.whatif(m.sessionId, move).then(
      (analysis) => {
        if (token === previewToken) {
          m.preview = analysis;
          renderControls(el.controls, m, callbacks);
        }
      },
      () => undefined, // stale/illegal previews just stay hidden
    );
  },
  onSubmit() {
    const m = model;
    const move = m?.draftMove();
    if (!m || !m.sessionId || !move) return;
    void withBusy(async () => {
      try {
        const state = await api.playMove(m.sessionId as string, move);
        m.applySession(state);
        showFormError("");
      } catch (err) {
        // 409/422: keep the draft so the user can fix it.
        if (err instanceof ApiError) showFormError(`${err.code}: ${err.message}`);
        else throw err;
      }
    });
  },
};

async function startGame(): Promise<void> {
  await withBusy(async () => {
    const graph = selectedGraph();
    const weights = readWeightsForm();
    for (const [edge, w] of Object.entries(weights)) {
      if (!Number.isInteger(w) || w < 1) {
        showFormError(`weight on ${edge} must be a positive integer`);
        return;
      }
    }
    const first = el.firstSelect.value === "engine" ? "engine" : "human";
    const state = await api.newSession(graph.id, weights, first);
    model = new BoardViewModel(graph, weights);
    model.applySession(state);
    showFormError("");
  });
}

async function init(): Promise<void> {
  graphs = await api.graphs();
  el.graphSelect.replaceChildren();
  for (const graph of graphs) {
    const option = document.createElement("option");
    option.value = graph.id;
    option.textContent = `${graph.id} (${graph.edges.map((e) => e.name).join(",")})`;
    el.graphSelect.appendChild(option);
  }
  el.graphSelect.value = "H1";
  renderWeightsForm();
  el.graphSelect.addEventListener("change", renderWeightsForm);
  el.startButton.addEventListener("click", () => void startGame());
}

void init();
