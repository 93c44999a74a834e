/** View state: a pure function of service responses and the layout seed.
 * The controller talks to the service and rebuilds the state wholesale
 * after every action; nothing combinatorial is computed client-side. */

import {
  ClassifyDoc,
  GraphDoc,
  MoveReport,
  QuiverDoc,
  ServiceError,
  SessionClient,
  WalksDoc,
} from "./api.js";
import { Layout, halfEdgeAngles, layoutGraph } from "./layout.js";
import { EdgeOverlay, walkOverlay } from "./overlay.js";

export interface HistoryItem {
  edge: string;
  direction: string;
  case: string;
}

export interface ViewState {
  graph: GraphDoc;
  quiver: QuiverDoc;
  walks: WalksDoc;
  classification: ClassifyDoc;
  layout: Layout;
  halfAngles: Record<string, number>;
  overlay: Record<string, EdgeOverlay>;
  selectedEdge: string | null;
  history: HistoryItem[];
  notice: string | null;
}

/** Heuristic for triangulation-derived graphs (as written by the polygon
 * builder): flips only make sense at internal arcs, so boundary arcs are
 * presented as disabled. */
export function isDisabledBoundaryArc(graph: GraphDoc, edge: string): boolean {
  const ids = graph.edges.map((e) => e.id);
  const fromBuilder = ids.every((id) => /^b\d+$/.test(id) || /^a\d+-\d+$/.test(id));
  return fromBuilder && /^b\d+$/.test(edge);
}

export class ExplorerController {
  private state: ViewState | null = null;
  private history: HistoryItem[] = [];

  constructor(readonly client: SessionClient, readonly layoutSeed = 1) {}

  current(): ViewState {
    if (!this.state) throw new Error("no graph loaded");
    return this.state;
  }

  private async refresh(notice: string | null = null): Promise<ViewState> {
    const [graph, quiver, walks, classification] = await Promise.all([
      this.client.graph(),
      this.client.quiver(),
      this.client.walks(),
      this.client.classify(),
    ]);
    this.state = {
      graph,
      quiver,
      walks,
      classification,
      layout: layoutGraph(graph, this.layoutSeed),
      halfAngles: halfEdgeAngles(graph),
      overlay: walkOverlay(walks),
      selectedEdge: null,
      history: [...this.history],
      notice,
    };
    return this.state;
  }

  async loadGraph(fileText: string): Promise<ViewState> {
    await this.client.loadGraph(fileText);
    this.history = [];
    return this.refresh();
  }

  select(edge: string | null): ViewState {
    const state = this.current();
    this.state = { ...state, selectedEdge: edge };
    return this.state;
  }

  /** Apply a slide move at the clicked edge.  Disabled boundary arcs and
   * service errors (for example the excluded loop) surface as a notice
   * without touching the combinatorial state. */
  async clickMutate(edge: string, direction: "plus" | "minus" = "plus"): Promise<ViewState> {
    if (isDisabledBoundaryArc(this.current().graph, edge)) {
      this.state = { ...this.current(), notice: `${edge} is a boundary arc; flips act on internal arcs only` };
      return this.state;
    }
    let move: MoveReport;
    try {
      move = await this.client.mutate(edge, direction);
    } catch (err) {
      if (err instanceof ServiceError) {
        const state = this.current();
        this.state = { ...state, notice: err.message };
        return this.state;
      }
      throw err;
    }
    this.history.push({ edge: move.edge, direction: move.direction, case: move.case });
    return this.refresh();
  }

  async undo(): Promise<ViewState> {
    await this.client.undo();
    this.history.pop();
    return this.refresh();
  }

  async exportGraph(): Promise<string> {
    return this.client.exportGraph();
  }
}
