import { PuzzleApi } from "./api.js";
import { asciiGrid } from "./board.js";
import { GameController, replayClickLog, type GameView } from "./game.js";
import { parseCellList, presetById, PRESETS } from "./presets.js";
import type { Mode } from "./types.js";

const el = {
  serverUrl: document.getElementById("serverUrl") as HTMLInputElement,
  presetSelect: document.getElementById("presetSelect") as HTMLSelectElement,
  modeMax: document.getElementById("modeMax") as HTMLInputElement,
  newGameBtn: document.getElementById("newGameBtn") as HTMLButtonElement,
  randRows: document.getElementById("randRows") as HTMLInputElement,
  randCols: document.getElementById("randCols") as HTMLInputElement,
  randDensity: document.getElementById("randDensity") as HTMLInputElement,
  randSeed: document.getElementById("randSeed") as HTMLInputElement,
  randomBtn: document.getElementById("randomBtn") as HTMLButtonElement,
  pasteArea: document.getElementById("pasteArea") as HTMLTextAreaElement,
  loadBtn: document.getElementById("loadBtn") as HTMLButtonElement,
  undoBtn: document.getElementById("undoBtn") as HTMLButtonElement,
  hintBtn: document.getElementById("hintBtn") as HTMLButtonElement,
  orientationToggle: document.getElementById("orientationToggle") as HTMLInputElement,
  banner: document.getElementById("banner")!,
  board: document.getElementById("board")!,
  movesUsed: document.getElementById("movesUsed")!,
  target: document.getElementById("target")!,
  remaining: document.getElementById("remaining")!,
  flagsList: document.getElementById("flagsList")!,
  log: document.getElementById("log")!,
  replayBtn: document.getElementById("replayBtn") as HTMLButtonElement,
  replayResult: document.getElementById("replayResult")!,
};

const ROW_PITCH = 30; // .board-row height, px

let api = new PuzzleApi(el.serverUrl.value);
let controller = new GameController(api);
let lastView: GameView | null = null;

for (const preset of PRESETS) {
  const option = document.createElement("option");
  option.value = preset.id;
  option.textContent = preset.label;
  el.presetSelect.appendChild(option);
}

function currentMode(): Mode {
  return el.modeMax.checked ? "max" : "min";
}

function showBanner(view: GameView): void {
  el.banner.className = view.banner?.kind ?? "";
  el.banner.textContent = view.banner?.message ?? "";
}

function renderBoard(view: GameView): void {
  el.board.replaceChildren();
  const vm = view.board;
  if (!vm) return;
  const order = [...vm.grid.keys()];
  if (el.orientationToggle.checked) order.reverse(); // matrix orientation: row 1 on top

  for (const i of order) {
    const label = vm.rowLabels[i];
    const rowDiv = document.createElement("div");
    rowDiv.className = "board-row";
    if (vm.liveRows.has(label)) rowDiv.classList.add("live");
    if (view.hintRow === label) rowDiv.classList.add("hint");
    const labelDiv = document.createElement("div");
    labelDiv.className = "row-label";
    labelDiv.textContent = String(label);
    rowDiv.appendChild(labelDiv);
    for (let j = 0; j < vm.cols; j++) {
      const cellDiv = document.createElement("div");
      cellDiv.className = vm.grid[i][j] ? "cell on" : "cell";
      cellDiv.dataset.row = String(label);
      cellDiv.dataset.col = String(j + 1);
      rowDiv.appendChild(cellDiv);
    }
    if (vm.liveRows.has(label)) {
      rowDiv.addEventListener("click", () => void controller.clickRow(label));
    }
    el.board.appendChild(rowDiv);
  }

  if (vm.isComplete && vm.grid.length === 0) {
    el.board.textContent = "(empty board)";
  }

  // animate the server-reported landing cell dropping from its source row
  const move = view.lastMove;
  if (move) {
    const target = el.board.querySelector<HTMLElement>(
      `[data-row="${move.target[0]}"][data-col="${move.target[1]}"]`,
    );
    if (target) {
      const dy = (move.source[0] - move.target[0]) * ROW_PITCH;
      const up = el.orientationToggle.checked ? dy : -dy;
      target.style.transition = "none";
      target.style.transform = `translateY(${up}px)`;
      requestAnimationFrame(() => {
        target.style.transition = "transform 180ms ease-in";
        target.style.transform = "translateY(0)";
      });
    }
  }
}

function renderScore(view: GameView): void {
  el.movesUsed.textContent = view.panel ? String(view.panel.movesUsed) : "–";
  el.target.textContent = view.panel ? String(view.panel.target) : "–";
  el.remaining.textContent = view.panel ? String(view.panel.remainingOptimal) : "–";
  el.flagsList.replaceChildren();
  if (!view.panel) return;
  view.panel.flags.forEach((flag, i) => {
    const item = document.createElement("li");
    item.className = `flag-${flag.quality}`;
    item.textContent = `move ${i + 1} (row ${flag.row}): ${flag.quality}`;
    el.flagsList.appendChild(item);
  });
}

function renderLog(): void {
  const log = controller.clickLog();
  el.log.textContent = log
    .map((e, i) => `${i + 1}. ${e.kind === "move" ? `row ${e.row}` : "undo"}`)
    .join("\n");
  el.replayBtn.disabled = log.length === 0 || !lastView?.state;
}

function render(view: GameView): void {
  lastView = view;
  showBanner(view);
  renderBoard(view);
  renderScore(view);
  renderLog();
  el.undoBtn.disabled = !view.canUndo || view.busy;
  el.hintBtn.disabled = !view.state;
}

controller.subscribe(render);

function reconnectIfChanged(): void {
  if (api.baseUrl !== el.serverUrl.value) {
    api = new PuzzleApi(el.serverUrl.value);
    controller = new GameController(api);
    controller.subscribe(render);
  }
}

el.newGameBtn.addEventListener("click", () => {
  reconnectIfChanged();
  const preset = presetById(el.presetSelect.value);
  void controller.newGame(currentMode(), { cells: preset.cells });
});

el.randomBtn.addEventListener("click", () => {
  reconnectIfChanged();
  void controller.newGame(currentMode(), {
    random: {
      rows: Number(el.randRows.value),
      cols: Number(el.randCols.value),
      density: Number(el.randDensity.value),
      seed: Number(el.randSeed.value),
    },
  });
});

el.loadBtn.addEventListener("click", () => {
  reconnectIfChanged();
  let cells;
  try {
    cells = parseCellList(el.pasteArea.value);
  } catch (err) {
    el.banner.className = "error";
    el.banner.textContent = (err as Error).message;
    return;
  }
  void controller.newGame(currentMode(), { cells });
});

el.undoBtn.addEventListener("click", () => void controller.undo());
el.hintBtn.addEventListener("click", () => void controller.requestHint());
el.orientationToggle.addEventListener("change", () => {
  if (lastView) render(lastView);
});

el.replayBtn.addEventListener("click", () => {
  const state = lastView?.state;
  if (!state) return;
  el.replayResult.textContent = "replaying…";
  replayClickLog(api, state.mode, state.initial_cells, controller.clickLog())
    .then((replayed) => {
      const same = replayed.grid === state.grid;
      el.replayResult.textContent = same
        ? "replay reproduces the current board"
        : "MISMATCH: replay produced a different board";
    })
    .catch(() => {
      el.replayResult.textContent = "replay failed (service unreachable?)";
    });
});

// expose the debug-grid text for quick console checks
declare global {
  interface Window {
    kohnertGrid?: () => string;
  }
}
window.kohnertGrid = () => (lastView?.board ? asciiGrid(lastView.board) : "");
