/** Deterministic replay of recorded click scripts against a live service.
 * Replaying a script reproduces the same final graph export, which is the
 * reproducibility contract of the whole client. */

import { SessionClient } from "./api.js";
import { ExplorerController } from "./state.js";

export type ScriptAction =
  | { action: "load"; fileText: string }
  | { action: "mutate"; edge: string; direction?: "plus" | "minus" }
  | { action: "undo" }
  | { action: "select"; edge: string | null };

export interface ReplayResult {
  exported: string;
  history: { edge: string; direction: string; case: string }[];
}

export async function replayScript(
  baseUrl: string,
  script: ScriptAction[],
  layoutSeed = 1,
): Promise<ReplayResult> {
  const client = await SessionClient.create(baseUrl);
  const controller = new ExplorerController(client, layoutSeed);
  for (const step of script) {
    switch (step.action) {
      case "load":
        await controller.loadGraph(step.fileText);
        break;
      case "mutate":
        await controller.clickMutate(step.edge, step.direction ?? "plus");
        break;
      case "undo":
        await controller.undo();
        break;
      case "select":
        controller.select(step.edge);
        break;
    }
  }
  return {
    exported: await controller.exportGraph(),
    history: controller.current().history,
  };
}
