// Client behavior against the real service: projections match the server's
// debug grid, errors are non-destructive, budgets and flags track play.
import { describe, expect, it } from "vitest";
import { ApiError, PuzzleApi } from "../src/api.js";
import { asciiGrid, toBoardViewModel } from "../src/board.js";
import { GameController } from "../src/game.js";
import { presetById } from "../src/presets.js";
import { SERVICE_URL } from "./service-url.js";

const api = new PuzzleApi(SERVICE_URL);
const small = presetById("small").cells;

describe("session lifecycle", () => {
  it("creates a session whose view model mirrors the server grid", async () => {
    const state = await api.createSession({ mode: "max", cells: small });
    const vm = toBoardViewModel(state);
    expect(asciiGrid(vm)).toBe(state.grid);
    expect(vm.target).toBe(3);
    expect(vm.remainingOptimal).toBe(3);
    expect([...vm.liveRows].sort()).toEqual([2, 3]);
  });

  it("keeps the view model in lockstep with the grid after every move", async () => {
    const game = new GameController(api);
    await game.newGame("max", { cells: presetById("large").cells });
    for (const row of [4, 2, 7, 3]) {
      await game.clickRow(row);
      const view = game.view();
      expect(view.banner?.kind).not.toBe("error");
      expect(asciiGrid(view.board!)).toBe(view.state!.grid);
    }
    expect(game.view().state?.moves_used).toBe(4);
  });

  it("a rejected move leaves the board exactly as it was", async () => {
    const game = new GameController(api);
    await game.newGame("max", { cells: small });
    const before = game.view().state!;
    await game.clickRow(1); // never movable
    const view = game.view();
    expect(view.banner?.kind).toBe("error");
    expect(view.state).toBe(before);
    expect(view.state!.moves_used).toBe(0);
  });

  it("a stale session id surfaces as a banner, not a crash", async () => {
    const game = new GameController(api);
    await game.newGame("max", { cells: small });
    const view = game.view();
    await expect(api.applyMove("no-such-session", 2)).rejects.toMatchObject({
      status: 404,
    });
    expect(view.state).not.toBeNull();
  });

  it("move then undo is the identity on the visible state", async () => {
    const game = new GameController(api);
    await game.newGame("min", { cells: small });
    const fresh = game.view().state!;
    expect(game.view().canUndo).toBe(false);
    await game.clickRow(3);
    expect(game.view().canUndo).toBe(true);
    await game.undo();
    const back = game.view().state!;
    expect(back.grid).toBe(fresh.grid);
    expect(back.cells).toEqual(fresh.cells);
    expect(back.moves_used).toBe(0);
    expect(game.view().canUndo).toBe(false);
  });
});

describe("score panel against live budgets", () => {
  it("flags the greedy-killing move on the small board in max mode", async () => {
    const game = new GameController(api);
    await game.newGame("max", { cells: small });
    await game.clickRow(3); // drops remaining max from 3 to 0
    const view = game.view();
    expect(view.panel?.flags).toEqual([{ row: 3, quality: "budget-lost" }]);
    expect(view.panel?.remainingOptimal).toBe(0);
    expect(view.state?.is_minimal).toBe(true);
    expect(view.banner).toEqual({ kind: "info", message: "minimal reached" });
  });

  it("flags a min-mode move that fills no empty square as wasted", async () => {
    const game = new GameController(api);
    await game.newGame("min", { cells: small });
    await game.clickRow(2); // moves (2,3), not its column's top
    expect(game.view().panel?.flags).toEqual([{ row: 2, quality: "wasted" }]);
    await game.clickRow(3); // moves the top of column 3 into the gap
    expect(game.view().panel?.flags[1]).toEqual({ row: 3, quality: "ok" });
  });

  it("hint on a minimal board is null and hints never mutate", async () => {
    const state = await api.createSession({ mode: "max", cells: [[1, 1]] });
    expect(await api.hint(state.id)).toEqual({ optimal_row: null });
    const after = await api.getState(state.id);
    expect(after.moves_used).toBe(0);
    expect(after.cells).toEqual(state.cells);
  });

  it("random sessions are reproducible from the same parameters", async () => {
    const params = { rows: 5, cols: 5, density: 0.3, seed: 11 };
    const a = await api.createSession({ mode: "max", random: params });
    const b = await api.createSession({ mode: "max", random: params });
    expect(a.cells).toEqual(b.cells);
    expect(a.id).not.toBe(b.id);
  });

  it("surfaces the service's validation errors with their reasons", async () => {
    await expect(api.createSession({ mode: "max", cells: [[0, 1]] })).rejects.toSatisfy(
      (err: unknown) =>
        err instanceof ApiError && err.status === 400 && /quadrant/.test(err.message),
    );
  });
});
