import type { CellPair } from "./types.js";

export interface Preset {
  id: string;
  label: string;
  cells: CellPair[];
}

// The two boards every budget and hint can be sanity-checked against by
// hand: max/min targets are 3/1 for the small one and 41/23 for the large.
export const PRESETS: Preset[] = [
  {
    id: "small",
    label: "Small board (5 cells)",
    cells: [
      [1, 1],
      [2, 1],
      [2, 2],
      [2, 3],
      [3, 3],
    ],
  },
  {
    id: "large",
    label: "Large board (17 cells)",
    cells: [
      [2, 1],
      [2, 2],
      [4, 2],
      [5, 2],
      [7, 2],
      [3, 3],
      [5, 3],
      [7, 3],
      [2, 4],
      [4, 4],
      [5, 4],
      [4, 5],
      [3, 6],
      [6, 6],
      [6, 7],
      [3, 8],
      [6, 8],
    ],
  },
];

export function presetById(id: string): Preset {
  const preset = PRESETS.find((p) => p.id === id);
  if (!preset) throw new Error(`unknown preset: ${id}`);
  return preset;
}

/**
 * Parse the cell-list text format: one "row col" pair per line, blank lines
 * and #-comments ignored. Throws on anything else (1-based line number in
 * the message), including duplicate cells.
 */
export function parseCellList(text: string): CellPair[] {
  const cells: CellPair[] = [];
  const seen = new Set<string>();
  const lines = text.split("\n");
  for (let i = 0; i < lines.length; i++) {
    const line = lines[i].trim();
    if (line === "" || line.startsWith("#")) continue;
    const tokens = line.split(/\s+/);
    if (tokens.length !== 2) {
      throw new Error(`line ${i + 1}: expected "row col", got ${JSON.stringify(line)}`);
    }
    const row = Number(tokens[0]);
    const col = Number(tokens[1]);
    if (!Number.isInteger(row) || !Number.isInteger(col)) {
      throw new Error(`line ${i + 1}: row and col must be integers`);
    }
    if (row < 1 || col < 1) {
      throw new Error(`line ${i + 1}: row and col must be >= 1`);
    }
    const key = `${row},${col}`;
    if (seen.has(key)) {
      throw new Error(`line ${i + 1}: duplicate cell (${row}, ${col})`);
    }
    seen.add(key);
    cells.push([row, col]);
  }
  return cells;
}

/** Inverse of parseCellList, cells in (col, row) order like the service reports them. */
export function renderCellList(cells: CellPair[]): string {
  const sorted = [...cells].sort(([r1, c1], [r2, c2]) => c1 - c2 || r1 - r2);
  return sorted.map(([r, c]) => `${r} ${c}\n`).join("");
}
