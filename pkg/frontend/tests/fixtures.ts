// Hand-built session states for unit tests; field values mirror what the
// service reports for the same boards (the integration tests check that).
import type { CellPair, Mode, SessionState } from "../src/types.js";

export const SMALL_CELLS: CellPair[] = [
  [1, 1],
  [2, 1],
  [2, 2],
  [2, 3],
  [3, 3],
];

export const SMALL_GRID = "..X\nXXX\nX..\n";

export function makeState(
  overrides: Partial<SessionState> & { cells: CellPair[]; mode: Mode },
): SessionState {
  return {
    id: "t-0",
    grid: "",
    initial_cells: overrides.cells,
    target: 0,
    moves_used: 0,
    history: [],
    live_rows: [],
    is_minimal: overrides.live_rows === undefined || overrides.live_rows.length === 0,
    remaining_max: 0,
    remaining_min: 0,
    created: 0,
    updated: 0,
    ...overrides,
  };
}

export function smallState(overrides: Partial<SessionState> = {}): SessionState {
  return makeState({
    mode: "max",
    cells: SMALL_CELLS,
    grid: SMALL_GRID,
    live_rows: [2, 3],
    target: 3,
    remaining_max: 3,
    remaining_min: 1,
    is_minimal: false,
    ...overrides,
  });
}
