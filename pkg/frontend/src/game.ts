import { ApiError } from "./api.js";
import { toBoardViewModel, type BoardViewModel } from "./board.js";
import { judgeMove, scorePanel, type MoveFlag, type ScorePanel } from "./score.js";
import type {
  CellPair,
  Mode,
  MoveRecordJson,
  NewSessionRequest,
  PuzzleClient,
  RandomSpec,
  SessionState,
} from "./types.js";

export type ClickEvent = { kind: "move"; row: number } | { kind: "undo" };

export interface Banner {
  kind: "error" | "info";
  message: string;
}

/** Everything the DOM layer needs to draw one frame. */
export interface GameView {
  state: SessionState | null;
  board: BoardViewModel | null;
  panel: ScorePanel | null;
  hintRow: number | null;
  banner: Banner | null;
  /** Last accepted move, for animating the dropped cell. */
  lastMove: MoveRecordJson | null;
  busy: boolean;
  canUndo: boolean;
}

export type NewGameSource = { cells: CellPair[] } | { random: RandomSpec };

/**
 * Holds the last service response and nothing else; every view is a pure
 * projection of it. Mutations (new game, click, undo) run through a promise
 * chain so at most one request is in flight per session — extra clicks
 * queue client-side and run in order. Rejected moves (409) and transport
 * errors only set the banner; they never touch the held state.
 */
export class GameController {
  private state: SessionState | null = null;
  private flags: MoveFlag[] = [];
  private log: ClickEvent[] = [];
  private hintRow: number | null = null;
  private banner: Banner | null = null;
  private lastMove: MoveRecordJson | null = null;
  private queue: Promise<void> = Promise.resolve();
  private pendingCount = 0;
  private listeners: Array<(view: GameView) => void> = [];

  constructor(private api: PuzzleClient) {}

  subscribe(listener: (view: GameView) => void): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    const view = this.view();
    for (const fn of this.listeners) fn(view);
  }

  view(): GameView {
    return {
      state: this.state,
      board: this.state ? toBoardViewModel(this.state) : null,
      panel: this.state ? scorePanel(this.state, this.flags) : null,
      hintRow: this.hintRow,
      banner: this.banner,
      lastMove: this.lastMove,
      busy: this.pendingCount > 0,
      canUndo: this.state !== null && this.state.moves_used > 0,
    };
  }

  clickLog(): ClickEvent[] {
    return [...this.log];
  }

  private enqueue(task: () => Promise<void>): Promise<void> {
    this.pendingCount += 1;
    this.emit();
    const run = this.queue.then(task).finally(() => {
      this.pendingCount -= 1;
      this.emit();
    });
    this.queue = run.catch(() => undefined); // keep the chain alive after failures
    return run;
  }

  /** Error → banner. State stays exactly as the last good response left it. */
  private fail(err: unknown): void {
    this.lastMove = null;
    if (err instanceof ApiError) {
      this.banner = { kind: "error", message: err.message };
    } else {
      this.banner = { kind: "error", message: "service unreachable" };
    }
  }

  newGame(mode: Mode, source: NewGameSource): Promise<void> {
    return this.enqueue(async () => {
      const req: NewSessionRequest =
        "cells" in source ? { mode, cells: source.cells } : { mode, random: source.random };
      try {
        const state = await this.api.createSession(req);
        this.state = state;
        this.flags = [];
        this.log = [];
        this.hintRow = null;
        this.lastMove = null;
        this.banner = state.is_minimal ? { kind: "info", message: "minimal reached" } : null;
      } catch (err) {
        this.fail(err);
      }
    });
  }

  clickRow(row: number): Promise<void> {
    return this.enqueue(async () => {
      if (!this.state) return;
      this.log.push({ kind: "move", row });
      try {
        const moved = await this.api.applyMove(this.state.id, row);
        this.flags.push(judgeMove(this.state, moved, row));
        this.state = moved;
        this.lastMove = moved.move;
        this.hintRow = null;
        this.banner = moved.is_minimal ? { kind: "info", message: "minimal reached" } : null;
      } catch (err) {
        this.fail(err);
      }
    });
  }

  undo(): Promise<void> {
    return this.enqueue(async () => {
      if (!this.state || this.state.moves_used === 0) return; // control is disabled anyway
      this.log.push({ kind: "undo" });
      try {
        this.state = await this.api.undo(this.state.id);
        this.flags.pop();
        this.hintRow = null;
        this.lastMove = null;
        this.banner = null;
      } catch (err) {
        this.fail(err);
      }
    });
  }

  /** Fetch and highlight the suggested row without playing it. */
  async requestHint(): Promise<void> {
    if (!this.state) return;
    try {
      const res = await this.api.hint(this.state.id);
      this.hintRow = res.optimal_row;
    } catch (err) {
      this.fail(err);
    }
    this.emit();
  }
}

/**
 * Re-run a recorded click log against a fresh session with the same start.
 * Moves the server rejected live (409) are replayed and rejected again, so
 * the result is the same final board the player saw.
 */
export async function replayClickLog(
  api: PuzzleClient,
  mode: Mode,
  initialCells: CellPair[],
  log: ClickEvent[],
): Promise<SessionState> {
  let state = await api.createSession({ mode, cells: initialCells });
  for (const event of log) {
    try {
      state = event.kind === "move" ? await api.applyMove(state.id, event.row) : await api.undo(state.id);
    } catch (err) {
      if (!(err instanceof ApiError) || err.status !== 409) throw err;
    }
  }
  return state;
}
