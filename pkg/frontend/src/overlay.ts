/** Walk overlay: color edges by the Green walks traversing them, exactly as
 * the service reports them.  Every edge belongs to exactly two traversals
 * (possibly the same walk twice). */

import type { WalksDoc } from "./api.js";

export const WALK_PALETTE = [
  "#c0392b",
  "#2980b9",
  "#27ae60",
  "#8e44ad",
  "#d35400",
  "#16a085",
  "#7f8c8d",
  "#f39c12",
];

export interface EdgeOverlay {
  /** walk indices visiting the edge, one entry per traversal */
  traversals: number[];
  colors: string[];
}

export function walkOverlay(walks: WalksDoc): Record<string, EdgeOverlay> {
  const out: Record<string, EdgeOverlay> = {};
  walks.green.forEach((walk, index) => {
    for (const edge of walk.edges) {
      const entry = (out[edge] ??= { traversals: [], colors: [] });
      entry.traversals.push(index);
      entry.colors.push(WALK_PALETTE[index % WALK_PALETTE.length]);
    }
  });
  return out;
}
