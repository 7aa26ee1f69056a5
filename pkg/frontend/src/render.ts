/** SVG board rendering and click dispatch. Presentation only. */

import type { BoardCell, BoardViewModel } from "./board.js";

const CELL = 56;
const RADIUS = 18;
const PAD = 40;

const FILLS: Record<string, string> = {
  free: "#ffffff",
  blue: "#2b5fc4",
  red: "#c43b2b",
  "blue-tint": "#b8cff0",
  "red-tint": "#f0bcb8",
  removed: "#ececec",
};

const SVG_NS = "http://www.w3.org/2000/svg";

function px(cell: BoardCell): { cx: number; cy: number } {
  return { cx: PAD + cell.x * CELL, cy: PAD + cell.y * CELL };
}

export function renderBoard(
  svg: SVGSVGElement,
  vm: BoardViewModel,
  onClick: (vertex: number) => void,
): void {
  svg.replaceChildren();
  const xs = vm.cells.map((c) => px(c).cx);
  const ys = vm.cells.map((c) => px(c).cy);
  svg.setAttribute("width", String(Math.max(...xs) + PAD));
  svg.setAttribute("height", String(Math.max(...ys) + PAD));

  const byVertex = new Map(vm.cells.map((c) => [c.vertex, c]));
  for (const edge of vm.edges) {
    const a = px(byVertex.get(edge.from)!);
    const b = px(byVertex.get(edge.to)!);
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(a.cx));
    line.setAttribute("y1", String(a.cy));
    line.setAttribute("x2", String(b.cx));
    line.setAttribute("y2", String(b.cy));
    line.setAttribute("stroke", edge.faded ? "#d8d8d8" : "#555555");
    line.setAttribute("stroke-width", edge.faded ? "1" : "1.6");
    svg.appendChild(line);
  }

  for (const cell of vm.cells) {
    const { cx, cy } = px(cell);
    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(cx));
    circle.setAttribute("cy", String(cy));
    circle.setAttribute("r", String(RADIUS));
    circle.setAttribute("fill", FILLS[cell.state]);
    circle.setAttribute("stroke", cell.lastMove ? "#e08a00" : "#222222");
    circle.setAttribute("stroke-width", cell.lastMove ? "3" : "1.2");
    if (cell.state === "removed") circle.setAttribute("stroke-dasharray", "3 3");
    if (cell.clickable) {
      circle.classList.add("clickable");
      circle.addEventListener("click", () => onClick(cell.vertex));
    }
    svg.appendChild(circle);

    const text = document.createElementNS(SVG_NS, "text");
    text.setAttribute("x", String(cx));
    text.setAttribute("y", String(cy + 3));
    text.setAttribute("text-anchor", "middle");
    text.setAttribute("font-size", "9");
    text.setAttribute(
      "fill",
      cell.state === "blue" || cell.state === "red" ? "#ffffff" : "#333333",
    );
    text.setAttribute("pointer-events", "none");
    text.textContent = cell.label;
    svg.appendChild(text);
  }
}
