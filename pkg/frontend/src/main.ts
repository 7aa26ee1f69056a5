/** Page wiring: pick a board, play against the engine, watch the analysis. */

import { ApiError, GameClient, type PlayerName, type SessionState } from "./api.js";
import { badgeText, buildBadge, buildViewModel } from "./board.js";
import { renderBoard } from "./render.js";

const $ = <T extends HTMLElement>(id: string): T =>
  document.getElementById(id) as T;

let client: GameClient | null = null;
let session: SessionState | null = null;
let pending = false;

function setStatus(text: string): void {
  $("status").textContent = text;
}

function setError(text: string): void {
  $("error").textContent = text;
}

async function refreshBadge(): Promise<void> {
  if (!client || !session) return;
  try {
    const analysis = await client.analysis(session.id);
    $("badge").textContent = badgeText(buildBadge(analysis));
  } catch (err) {
    $("badge").textContent = `analysis unavailable: ${String(err)}`;
  }
}

function draw(): void {
  if (!session) return;
  const vm = buildViewModel(session);
  renderBoard(
    $("board") as unknown as SVGSVGElement,
    vm,
    (vertex) => void onCellClick(vertex),
  );
  setStatus(vm.status);
}

async function onCellClick(vertex: number): Promise<void> {
  if (!client || !session || pending) return;
  pending = true;
  setError("");
  try {
    session = await client.submitMove(session.id, vertex);
    draw();
    await refreshBadge();
  } catch (err) {
    if (err instanceof ApiError && err.status === 409) {
      setError(`illegal move: ${err.detail}`);
    } else {
      setError(String(err));
    }
  } finally {
    pending = false;
  }
}

async function newGame(): Promise<void> {
  setError("");
  client = new GameClient(($("api-base") as HTMLInputElement).value.replace(/\/$/, ""));
  const family = ($("family") as HTMLSelectElement).value;
  const n = Number(($("size") as HTMLInputElement).value);
  const human = ($("side") as HTMLSelectElement).value as PlayerName;
  try {
    session = await client.createGame(family, n, human);
    draw();
    await refreshBadge();
  } catch (err) {
    setError(String(err));
  }
}

async function loadFamilies(): Promise<void> {
  client = new GameClient(($("api-base") as HTMLInputElement).value.replace(/\/$/, ""));
  try {
    const families = await client.families();
    const select = $("family") as HTMLSelectElement;
    select.replaceChildren(
      ...families.map((f) => {
        const opt = document.createElement("option");
        opt.value = f.family;
        opt.textContent = `${f.family} (n ${f.min_n}..${f.max_n})`;
        return opt;
      }),
    );
    setStatus("pick a board and start");
  } catch (err) {
    setError(`service unreachable: ${String(err)}`);
  }
}

window.addEventListener("DOMContentLoaded", () => {
  $("connect").addEventListener("click", () => void loadFamilies());
  $("new-game").addEventListener("click", () => void newGame());
  void loadFamilies();
});
