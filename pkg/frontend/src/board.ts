/**
 * Board view model: a pure mapping from service JSON to drawable cells.
 *
 * Rows are staggered by half a cell so every board triangle renders
 * equilateral.  No game rules here — a cell is clickable exactly when the
 * service lists it as a legal move for the human side.
 */

import type { AnalysisJson, SessionState } from "./api.js";

export type CellState = "free" | "blue" | "red" | "blue-tint" | "red-tint" | "removed";

export interface BoardCell {
  vertex: number;
  label: string;
  x: number;
  y: number;
  state: CellState;
  clickable: boolean;
  lastMove: boolean;
}

export interface BoardEdge {
  from: number;
  to: number;
  faded: boolean;
}

export interface BoardViewModel {
  cells: BoardCell[];
  edges: BoardEdge[];
  status: string;
  gameOver: boolean;
  clickableVertices: number[];
}

export interface AnalysisBadge {
  outcome: string;
  toMove: string;
  winningMoves: number[];
  winningLabels: string[];
}

const ROW_DY = Math.sqrt(3) / 2;

/** Grid column/row to unit-cell drawing coordinates (y grows downward). */
export function layoutCoords(col: number, row: number): { x: number; y: number } {
  return { x: col - (row - 1) / 2, y: (row - 1) * ROW_DY };
}

function cellState(state: SessionState, vertex: number): CellState {
  const claim = state.history.find((h) => h.vertex === vertex);
  if (claim) return claim.player === "Left" ? "blue" : "red";
  if (!state.position.alive.includes(vertex)) return "removed";
  if (state.position.blue.includes(vertex)) return "blue-tint";
  if (state.position.red.includes(vertex)) return "red-tint";
  return "free";
}

function statusLine(state: SessionState): string {
  if (state.game_over) {
    const w = state.winner;
    const who = w === state.human_player ? "you win" : "engine wins";
    return `game over: ${w} made the last move (${who})`;
  }
  return state.to_move === state.human_player
    ? `your move (${state.human_player})`
    : `engine thinking (${state.to_move})`;
}

export function buildViewModel(state: SessionState): BoardViewModel {
  const humanTurn = !state.game_over && state.to_move === state.human_player;
  const legal = new Set(humanTurn ? state.legal_moves : []);
  const last = state.history.length
    ? state.history[state.history.length - 1].vertex
    : -1;
  const cells = state.graph.vertices.map((label, vertex) => {
    const [col, row] = state.graph.coords[vertex];
    const { x, y } = layoutCoords(col, row);
    return {
      vertex,
      label,
      x,
      y,
      state: cellState(state, vertex),
      clickable: legal.has(vertex),
      lastMove: vertex === last,
    };
  });
  const aliveSet = new Set(state.position.alive);
  const edges = state.graph.edges.map(([from, to]) => ({
    from,
    to,
    faded: !aliveSet.has(from) || !aliveSet.has(to),
  }));
  return {
    cells,
    edges,
    status: statusLine(state),
    gameOver: state.game_over,
    clickableVertices: cells.filter((c) => c.clickable).map((c) => c.vertex),
  };
}

/** Analysis badge data, verbatim from the service. */
export function buildBadge(analysis: AnalysisJson): AnalysisBadge {
  return {
    outcome: analysis.outcome,
    toMove: analysis.to_move,
    winningMoves: analysis.winning_moves,
    winningLabels: analysis.winning_move_labels,
  };
}

export function badgeText(badge: AnalysisBadge): string {
  const moves = badge.winningLabels.length ? badge.winningLabels.join(" ") : "none";
  return `outcome ${badge.outcome} · to move ${badge.toMove} · winning: ${moves}`;
}
