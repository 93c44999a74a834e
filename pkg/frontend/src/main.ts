/** Browser shell: wires the controller to the DOM.  All mathematics stays
 * on the service; this file only moves strings around. */

import { SessionClient } from "./api.js";
import { ExplorerController, ViewState } from "./state.js";
import {
  renderClassificationCard,
  renderGraphSvg,
  renderHistory,
  renderQuiverPanel,
  renderWalkPanel,
} from "./render.js";

const SERVICE_URL = (window as unknown as { BGA_SERVICE_URL?: string }).BGA_SERVICE_URL ?? "http://127.0.0.1:8671";

function el(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node;
}

function draw(state: ViewState): void {
  el("canvas").innerHTML = renderGraphSvg(state);
  el("classification").innerHTML = renderClassificationCard(state);
  el("quiver").innerHTML = renderQuiverPanel(state);
  el("walks").innerHTML = renderWalkPanel(state);
  el("history").innerHTML = renderHistory(state);
  el("notice").textContent = state.notice ?? "";
  for (const path of el("canvas").querySelectorAll<SVGPathElement>("path.edge")) {
    path.addEventListener("click", () => void onEdgeClick(path.dataset.edge ?? ""));
  }
}

let controller: ExplorerController | null = null;

async function onEdgeClick(edge: string): Promise<void> {
  if (!controller || !edge) return;
  const direction = (el("direction") as HTMLSelectElement).value === "minus" ? "minus" : "plus";
  draw(await controller.clickMutate(edge, direction));
}

async function boot(): Promise<void> {
  const client = await SessionClient.create(SERVICE_URL);
  controller = new ExplorerController(client, 1);

  (el("file") as HTMLInputElement).addEventListener("change", async (ev) => {
    const input = ev.target as HTMLInputElement;
    const file = input.files?.[0];
    if (!file || !controller) return;
    try {
      draw(await controller.loadGraph(await file.text()));
    } catch (err) {
      el("notice").textContent = String(err);
    }
  });

  el("undo").addEventListener("click", async () => {
    if (!controller) return;
    try {
      draw(await controller.undo());
    } catch (err) {
      el("notice").textContent = String(err);
    }
  });

  el("export").addEventListener("click", async () => {
    if (!controller) return;
    const text = await controller.exportGraph();
    const blob = new Blob([text], { type: "application/json" });
    const a = document.createElement("a");
    a.href = URL.createObjectURL(blob);
    a.download = "graph.bg";
    a.click();
  });
}

void boot();
