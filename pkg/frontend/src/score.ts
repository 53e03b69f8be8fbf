import type { CellPair, SessionState } from "./types.js";

/**
 * Number of empty positions on the board: cell-free squares lying strictly
 * below some cell of their column. Per column that is (top row - cell count).
 */
export function emptyCount(cells: CellPair[]): number {
  const top = new Map<number, number>();
  const count = new Map<number, number>();
  for (const [r, c] of cells) {
    if (r > (top.get(c) ?? 0)) top.set(c, r);
    count.set(c, (count.get(c) ?? 0) + 1);
  }
  let total = 0;
  for (const [c, t] of top) total += t - (count.get(c) ?? 0);
  return total;
}

export type MoveQuality = "ok" | "budget-lost" | "wasted";

export interface MoveFlag {
  row: number;
  quality: MoveQuality;
}

/**
 * Grade one accepted move from the states before and after it.
 *
 * Max mode: any move costs at least 1 off the remaining-max budget; a drop
 * of more than 1 means optimal play can no longer reach the old bound, so
 * the difference is budget lost. Min mode: a move only makes progress when
 * it fills an empty position (the moved cell was its column's top);
 * otherwise the empty count is unchanged and the move was wasted.
 */
export function judgeMove(prev: SessionState, next: SessionState, row: number): MoveFlag {
  if (prev.mode === "max") {
    const lost = prev.remaining_max - next.remaining_max > 1;
    return { row, quality: lost ? "budget-lost" : "ok" };
  }
  const wasted = emptyCount(next.cells) === emptyCount(prev.cells);
  return { row, quality: wasted ? "wasted" : "ok" };
}

export interface ScorePanel {
  movesUsed: number;
  target: number;
  remainingOptimal: number;
  flags: MoveFlag[];
}

export function scorePanel(state: SessionState, flags: MoveFlag[]): ScorePanel {
  return {
    movesUsed: state.moves_used,
    target: state.target,
    remainingOptimal: state.mode === "max" ? state.remaining_max : state.remaining_min,
    flags: [...flags],
  };
}
