/** SVG renderer.  Pure string output so it can be exercised without a DOM;
 * the browser shell just assigns innerHTML. */

import type { ViewState } from "./state.js";
import type { Point } from "./layout.js";
import { WALK_PALETTE } from "./overlay.js";

const EDGE_COLOR = "#444";
const SELECTED_COLOR = "#e74c3c";

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/"/g, "&quot;");
}

interface EdgeGeometry {
  id: string;
  from: Point;
  to: Point;
  loopAt: string | null;
  bend: number;
}

function edgeGeometries(state: ViewState): EdgeGeometry[] {
  const halfVertex: Record<string, string> = {};
  for (const v of state.graph.vertices) for (const h of v.cycle) halfVertex[h] = v.id;
  const seen: Record<string, number> = {};
  return state.graph.edges.map((e) => {
    const [a, b] = e.halves;
    const va = halfVertex[a];
    const vb = halfVertex[b];
    const key = [va, vb].sort().join("|");
    const bend = (seen[key] = (seen[key] ?? 0) + 1);
    return {
      id: e.id,
      from: state.layout[va],
      to: state.layout[vb],
      loopAt: va === vb ? va : null,
      bend,
    };
  });
}

function edgePath(g: EdgeGeometry): string {
  if (g.loopAt) {
    const { x, y } = g.from;
    const r = 18 + 10 * g.bend;
    return `M ${x} ${y} C ${x - r * 2} ${y - r * 2}, ${x + r * 2} ${y - r * 2}, ${x} ${y}`;
  }
  const mx = (g.from.x + g.to.x) / 2;
  const my = (g.from.y + g.to.y) / 2;
  const dx = g.to.x - g.from.x;
  const dy = g.to.y - g.from.y;
  const norm = Math.max(Math.hypot(dx, dy), 1);
  const off = (g.bend - 1) * 18;
  const cx = mx - (dy / norm) * off;
  const cy = my + (dx / norm) * off;
  return `M ${g.from.x} ${g.from.y} Q ${cx} ${cy} ${g.to.x} ${g.to.y}`;
}

/** Render the loaded graph: vertices with multiplicity badges, half-edge
 * spokes in their cyclic order, and edges tinted by their Green walks. */
export function renderGraphSvg(state: ViewState, width = 500, height = 500): string {
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" width="${width}" height="${height}">`,
  ];
  for (const g of edgeGeometries(state)) {
    const overlay = state.overlay[g.id];
    const base = overlay ? overlay.colors[0] : EDGE_COLOR;
    const second = overlay && overlay.colors.length > 1 ? overlay.colors[1] : base;
    const selected = state.selectedEdge === g.id;
    parts.push(
      `<path class="edge" data-edge="${esc(g.id)}" d="${edgePath(g)}" fill="none" ` +
        `stroke="${selected ? SELECTED_COLOR : base}" stroke-width="${selected ? 5 : 3.5}"/>`,
    );
    parts.push(
      `<path class="edge-overlay" data-edge="${esc(g.id)}" d="${edgePath(g)}" fill="none" ` +
        `stroke="${second}" stroke-width="1.6" stroke-dasharray="6 6"/>`,
    );
  }
  for (const v of state.graph.vertices) {
    const p = state.layout[v.id];
    for (const h of v.cycle) {
      const angle = state.halfAngles[h];
      parts.push(
        `<line class="spoke" data-half="${esc(h)}" x1="${p.x}" y1="${p.y}" ` +
          `x2="${p.x + 14 * Math.cos(angle)}" y2="${p.y + 14 * Math.sin(angle)}" ` +
          `stroke="#999" stroke-width="1"/>`,
      );
    }
    parts.push(
      `<circle class="vertex" data-vertex="${esc(v.id)}" cx="${p.x}" cy="${p.y}" r="9" ` +
        `fill="#2c3e50"/>`,
    );
    parts.push(
      `<text x="${p.x}" y="${p.y - 13}" text-anchor="middle" font-size="11">${esc(v.id)}</text>`,
    );
    if (v.multiplicity > 1) {
      parts.push(
        `<rect class="mult-badge" data-vertex="${esc(v.id)}" x="${p.x + 8}" y="${p.y + 6}" ` +
          `width="14" height="14" fill="#f1c40f" stroke="#333"/>`,
      );
      parts.push(
        `<text x="${p.x + 15}" y="${p.y + 17}" text-anchor="middle" font-size="10">` +
          `${v.multiplicity}</text>`,
      );
    }
  }
  parts.push("</svg>");
  return parts.join("\n");
}

export function renderClassificationCard(state: ViewState): string {
  const c = state.classification;
  const rows = [
    `<dt>type</dt><dd>${esc(c.repType)}${c.basis ? ` (${esc(c.basis)})` : ""}</dd>`,
  ];
  if (c.domestic) {
    rows.push(`<dt>parameters</dt><dd>m=${c.domestic.m}, p=${c.domestic.p}, q=${c.domestic.q}</dd>`);
  }
  if (c.exceptionalTubes.length) {
    rows.push(`<dt>tube ranks</dt><dd>${c.exceptionalTubes.join(", ")}</dd>`);
  }
  for (const f of c.families) {
    rows.push(`<dt>${esc(f.form)}</dt><dd>${f.count === "infinite" ? "∞" : f.count}</dd>`);
  }
  return `<dl class="classification">${rows.join("")}</dl>`;
}

export function renderQuiverPanel(state: ViewState): string {
  const rows = state.quiver.arrows
    .map((a) => `<li><code>${esc(a.name)}</code>: ${esc(a.source)} → ${esc(a.target)}</li>`)
    .join("");
  return `<ul class="quiver">${rows}</ul>`;
}

export function renderWalkPanel(state: ViewState): string {
  const rows = state.walks.green
    .map(
      (w, i) =>
        `<li><span class="swatch" style="background:${
          WALK_PALETTE[i % WALK_PALETTE.length]
        }"></span> period ${w.period}: ${w.edges.map(esc).join(" ")}</li>`,
    )
    .join("");
  return `<ul class="walks">${rows}</ul>`;
}

export function renderHistory(state: ViewState): string {
  const items = state.history
    .map((h) => `<li>${esc(h.edge)} (${esc(h.direction)}, case ${esc(h.case)})</li>`)
    .join("");
  return `<ol class="history">${items}</ol>`;
}
