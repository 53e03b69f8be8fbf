import { describe, expect, it } from "vitest";
import { emptyCount, judgeMove, scorePanel } from "../src/score.js";
import { SMALL_CELLS, smallState } from "./fixtures.js";
import { presetById } from "../src/presets.js";

describe("emptyCount", () => {
  it("counts cell-free squares below the top of each column", () => {
    expect(emptyCount(SMALL_CELLS)).toBe(2); // one under (2,2), one under (3,3)
    expect(emptyCount(presetById("large").cells)).toBe(26);
    expect(emptyCount([])).toBe(0);
    expect(
      emptyCount([
        [1, 1],
        [2, 1],
      ]),
    ).toBe(0); // solid column
    expect(emptyCount([[4, 2]])).toBe(3);
  });
});

describe("judgeMove", () => {
  it("flags a max-mode move that burns more than one unit of budget", () => {
    const before = smallState({ remaining_max: 3 });
    const crash = smallState({ remaining_max: 0, moves_used: 1 });
    expect(judgeMove(before, crash, 3)).toEqual({ row: 3, quality: "budget-lost" });
    const fine = smallState({ remaining_max: 2, moves_used: 1 });
    expect(judgeMove(before, fine, 2)).toEqual({ row: 2, quality: "ok" });
  });

  it("flags a min-mode move that fills no empty square as wasted", () => {
    const before = smallState({ mode: "min" });
    // rightmost cell of row 2 is (2,3), not its column's top -> |empty| stays 2
    const after = smallState({
      mode: "min",
      cells: [
        [1, 1],
        [2, 1],
        [2, 2],
        [1, 3],
        [3, 3],
      ],
      moves_used: 1,
    });
    expect(judgeMove(before, after, 2)).toEqual({ row: 2, quality: "wasted" });
    // row 3 drops the top of column 3 -> one empty square filled
    const good = smallState({
      mode: "min",
      cells: [
        [1, 1],
        [2, 1],
        [2, 2],
        [1, 3],
        [2, 3],
      ],
      moves_used: 1,
    });
    expect(judgeMove(before, good, 3)).toEqual({ row: 3, quality: "ok" });
  });
});

describe("scorePanel", () => {
  it("projects the running totals and copies the flags", () => {
    const flags = [{ row: 2, quality: "ok" as const }];
    const panel = scorePanel(smallState({ moves_used: 1, remaining_max: 2 }), flags);
    expect(panel).toEqual({ movesUsed: 1, target: 3, remainingOptimal: 2, flags });
    expect(panel.flags).not.toBe(flags);
  });
});
