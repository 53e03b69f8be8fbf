import type { CellPair, Mode, SessionState } from "./types.js";

/**
 * Pure projection of a session response into what the board widget draws.
 *
 * `grid` is row-major occupancy with `grid[0]` the HIGHEST board row, so
 * rendering rows in array order puts row 1 at the bottom of the screen
 * (the puzzle's native orientation). `rowLabels[i]` is the 1-based board
 * row number of `grid[i]`.
 */
export interface BoardViewModel {
  grid: boolean[][];
  rowLabels: number[];
  cols: number;
  liveRows: ReadonlySet<number>;
  movesUsed: number;
  target: number;
  remainingOptimal: number;
  mode: Mode;
  isComplete: boolean;
}

export function boardExtent(cells: CellPair[]): { rows: number; cols: number } {
  let rows = 0;
  let cols = 0;
  for (const [r, c] of cells) {
    if (r > rows) rows = r;
    if (c > cols) cols = c;
  }
  return { rows, cols };
}

export function toBoardViewModel(state: SessionState): BoardViewModel {
  const { rows, cols } = boardExtent(state.cells);
  const grid: boolean[][] = [];
  for (let i = 0; i < rows; i++) grid.push(new Array<boolean>(cols).fill(false));
  for (const [r, c] of state.cells) grid[rows - r][c - 1] = true;
  const rowLabels: number[] = [];
  for (let r = rows; r >= 1; r--) rowLabels.push(r);
  return {
    grid,
    rowLabels,
    cols,
    liveRows: new Set(state.live_rows),
    movesUsed: state.moves_used,
    target: state.target,
    remainingOptimal: state.mode === "max" ? state.remaining_max : state.remaining_min,
    mode: state.mode,
    isComplete: state.live_rows.length === 0,
  };
}

/** Board as the service's debug-grid text ('X'/'.', top row first). */
export function asciiGrid(vm: BoardViewModel): string {
  return vm.grid.map((row) => row.map((on) => (on ? "X" : ".")).join("") + "\n").join("");
}
