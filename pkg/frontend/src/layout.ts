/** Seeded cosmetic layout.  Positions never feed back into the
 * combinatorial data; the seed only makes screenshots reproducible. */

import type { GraphDoc } from "./api.js";

export interface Point {
  x: number;
  y: number;
}

export type Layout = Record<string, Point>;

/** Small deterministic PRNG (mulberry32). */
export function rng(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a |= 0;
    a = (a + 0x6d2b79f5) | 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

/** Circular start positions followed by a few force-directed sweeps. */
export function layoutGraph(doc: GraphDoc, seed = 1, sweeps = 60): Layout {
  const ids = doc.vertices.map((v) => v.id).sort();
  const random = rng(seed);
  const pos: Layout = {};
  ids.forEach((id, i) => {
    const angle = (2 * Math.PI * i) / ids.length;
    pos[id] = {
      x: 250 + 180 * Math.cos(angle) + 8 * (random() - 0.5),
      y: 250 + 180 * Math.sin(angle) + 8 * (random() - 0.5),
    };
  });
  const halfVertex: Record<string, string> = {};
  for (const v of doc.vertices) for (const h of v.cycle) halfVertex[h] = v.id;
  const springs = doc.edges
    .map((e) => [halfVertex[e.halves[0]], halfVertex[e.halves[1]]] as const)
    .filter(([a, b]) => a !== b);
  for (let step = 0; step < sweeps; step++) {
    const force: Layout = Object.fromEntries(ids.map((id) => [id, { x: 0, y: 0 }]));
    for (const a of ids) {
      for (const b of ids) {
        if (a >= b) continue;
        const dx = pos[a].x - pos[b].x;
        const dy = pos[a].y - pos[b].y;
        const d2 = Math.max(dx * dx + dy * dy, 25);
        const push = 12000 / d2;
        const d = Math.sqrt(d2);
        force[a].x += (push * dx) / d;
        force[a].y += (push * dy) / d;
        force[b].x -= (push * dx) / d;
        force[b].y -= (push * dy) / d;
      }
    }
    for (const [a, b] of springs) {
      const dx = pos[b].x - pos[a].x;
      const dy = pos[b].y - pos[a].y;
      const d = Math.max(Math.sqrt(dx * dx + dy * dy), 1);
      const pull = 0.02 * (d - 120);
      force[a].x += (pull * dx) / d;
      force[a].y += (pull * dy) / d;
      force[b].x -= (pull * dx) / d;
      force[b].y -= (pull * dy) / d;
    }
    for (const id of ids) {
      pos[id].x += Math.max(-12, Math.min(12, force[id].x));
      pos[id].y += Math.max(-12, Math.min(12, force[id].y));
    }
  }
  return pos;
}

/** Angular slot, in radians, of each half-edge around its vertex, honoring
 * the stored clockwise cyclic order (screen y grows downward, so clockwise
 * on screen is the mathematically positive sweep here). */
export function halfEdgeAngles(doc: GraphDoc): Record<string, number> {
  const out: Record<string, number> = {};
  for (const v of doc.vertices) {
    const n = v.cycle.length;
    v.cycle.forEach((h, i) => {
      out[h] = (2 * Math.PI * i) / n - Math.PI / 2;
    });
  }
  return out;
}
