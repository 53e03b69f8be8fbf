// JSON shapes exchanged with the puzzle service.

export type Mode = "max" | "min";

/** One board cell as [row, col], both 1-based. */
export type CellPair = [number, number];

export interface MoveRecordJson {
  row: number;
  source: CellPair;
  target: CellPair;
}

export interface SessionState {
  id: string;
  mode: Mode;
  cells: CellPair[];
  grid: string;
  initial_cells: CellPair[];
  target: number;
  moves_used: number;
  history: MoveRecordJson[];
  live_rows: number[];
  is_minimal: boolean;
  remaining_max: number;
  remaining_min: number;
  created: number;
  updated: number;
}

export interface MoveResponse extends SessionState {
  move: MoveRecordJson;
}

export interface HintResponse {
  optimal_row: number | null;
}

export interface RandomSpec {
  rows: number;
  cols: number;
  density: number;
  seed: number;
}

/** Error payload the service puts under "detail" on 4xx responses. */
export interface ServiceErrorDetail {
  error: string;
  reason?: string;
  row?: number;
  limit?: number;
}

export type NewSessionRequest =
  | { mode: Mode; cells: CellPair[] }
  | { mode: Mode; random: RandomSpec };

/** The client surface the game controller needs; PuzzleApi is the real one. */
export interface PuzzleClient {
  createSession(req: NewSessionRequest): Promise<SessionState>;
  getState(id: string): Promise<SessionState>;
  applyMove(id: string, row: number): Promise<MoveResponse>;
  undo(id: string): Promise<SessionState>;
  hint(id: string): Promise<HintResponse>;
}
