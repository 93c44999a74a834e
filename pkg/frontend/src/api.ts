/** Typed client for the bga session service.  The client never computes
 * combinatorial data itself: every displayed fact is fetched. */

export interface GraphDoc {
  format: string;
  vertices: { id: string; multiplicity: number; cycle: string[] }[];
  edges: { id: string; halves: [string, string] }[];
}

export interface GraphSummary {
  vertices: number;
  edges: number;
  faces: number;
  genus: number;
}

export interface QuiverDoc {
  dualNumbers: boolean;
  vertices: string[];
  arrows: { name: string; source: string; target: string; vertex: string }[];
  relations: { kind: string; terms: string[][]; minimal: boolean }[];
}

export interface WalkRow {
  period: number;
  halves: string[];
  edges: string[];
}

export interface WalksDoc {
  green: WalkRow[];
  doubleStepped: WalkRow[];
}

export interface ClassifyDoc {
  repType: string;
  basis: string;
  exceptionalTubes: number[];
  families: { form: string; count: number | "infinite" }[];
  domestic?: { m: number; p: number; q: number };
}

export interface MoveReport {
  edge: string;
  direction: string;
  case: string;
  relocations: {
    half: string;
    oldVertex: string;
    slideEdge: string;
    newVertex: string;
    anchorHalf: string;
  }[];
}

export interface ServiceErrorBody {
  error: { message: string; location?: string };
}

export class ServiceError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

async function expectOk(res: Response): Promise<Response> {
  if (!res.ok) {
    let message = `${res.status}`;
    try {
      const body = (await res.json()) as ServiceErrorBody;
      message = body.error?.message ?? message;
    } catch {
      /* non-JSON error body */
    }
    throw new ServiceError(res.status, message);
  }
  return res;
}

export class SessionClient {
  constructor(readonly baseUrl: string, readonly sessionId: string) {}

  static async create(baseUrl: string): Promise<SessionClient> {
    const res = await expectOk(await fetch(`${baseUrl}/session`, { method: "POST" }));
    const body = (await res.json()) as { sessionId: string };
    return new SessionClient(baseUrl, body.sessionId);
  }

  private url(tail: string): string {
    return `${this.baseUrl}/session/${this.sessionId}/${tail}`;
  }

  async loadGraph(fileText: string): Promise<GraphSummary> {
    const res = await expectOk(
      await fetch(this.url("graph"), { method: "POST", body: fileText }),
    );
    const body = (await res.json()) as { summary: GraphSummary };
    return body.summary;
  }

  /** The canonical graph file, byte-for-byte as the CLI would write it. */
  async exportGraph(): Promise<string> {
    const res = await expectOk(await fetch(this.url("graph")));
    return res.text();
  }

  async graph(): Promise<GraphDoc> {
    return JSON.parse(await this.exportGraph()) as GraphDoc;
  }

  async quiver(): Promise<QuiverDoc> {
    const res = await expectOk(await fetch(this.url("quiver")));
    return (await res.json()) as QuiverDoc;
  }

  async walks(): Promise<WalksDoc> {
    const res = await expectOk(await fetch(this.url("walks")));
    return (await res.json()) as WalksDoc;
  }

  async classify(): Promise<ClassifyDoc> {
    const res = await expectOk(await fetch(this.url("classify")));
    return (await res.json()) as ClassifyDoc;
  }

  async mutate(edge: string, direction: "plus" | "minus" = "plus"): Promise<MoveReport> {
    const res = await expectOk(
      await fetch(this.url("mutate"), {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({ edge, direction }),
      }),
    );
    const body = (await res.json()) as { move: MoveReport };
    return body.move;
  }

  async undo(): Promise<void> {
    await expectOk(await fetch(this.url("undo"), { method: "POST" }));
  }
}
