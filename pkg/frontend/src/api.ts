/** Typed client for the snortlab analysis service. All rules live server-side. */

export interface PositionJson {
  alive: number[];
  blue: number[];
  red: number[];
}

export interface GraphJson {
  family: string | null;
  n: number;
  vertices: string[];
  coords: [number, number][];
  edges: [number, number][];
}

export type PlayerName = "Left" | "Right";

export interface HistoryEntry {
  player: PlayerName;
  vertex: number;
  label: string;
}

export interface SessionState {
  id: string;
  family: string;
  n: number;
  human_player: PlayerName;
  engine_player: PlayerName;
  graph: GraphJson;
  position: PositionJson;
  to_move: PlayerName;
  history: HistoryEntry[];
  legal_moves: number[];
  game_over: boolean;
  winner: PlayerName | null;
  human_move?: number | null;
  engine_move?: number | null;
}

export interface AnalysisJson {
  outcome: "N" | "P" | "L" | "R";
  to_move: PlayerName;
  winning_moves: number[];
  winning_move_labels: string[];
  position: PositionJson;
}

export interface FamilyInfo {
  family: string;
  rows: number;
  min_n: number;
  max_n: number;
}

export class ApiError extends Error {
  constructor(public status: number, public detail: string) {
    super(`HTTP ${status}: ${detail}`);
  }
}

async function unwrap<T>(resp: Response): Promise<T> {
  if (!resp.ok) {
    let detail = resp.statusText;
    try {
      const body = await resp.json();
      if (typeof body?.detail === "string") detail = body.detail;
      else if (body?.detail) detail = JSON.stringify(body.detail);
    } catch {
      /* non-JSON error body */
    }
    throw new ApiError(resp.status, detail);
  }
  return resp.json() as Promise<T>;
}

export class GameClient {
  constructor(private readonly base: string) {}

  families(): Promise<FamilyInfo[]> {
    return fetch(`${this.base}/families`).then((r) => unwrap<FamilyInfo[]>(r));
  }

  createGame(family: string, n: number, humanPlayer: PlayerName): Promise<SessionState> {
    return fetch(`${this.base}/games`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ family, n, human_player: humanPlayer }),
    }).then((r) => unwrap<SessionState>(r));
  }

  getGame(id: string): Promise<SessionState> {
    return fetch(`${this.base}/games/${id}`).then((r) => unwrap<SessionState>(r));
  }

  submitMove(id: string, vertex: number): Promise<SessionState> {
    return fetch(`${this.base}/games/${id}/moves`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ vertex }),
    }).then((r) => unwrap<SessionState>(r));
  }

  analysis(id: string): Promise<AnalysisJson> {
    return fetch(`${this.base}/games/${id}/analysis`).then((r) => unwrap<AnalysisJson>(r));
  }
}
