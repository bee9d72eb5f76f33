/** DOM wiring: renders BoardState and forwards clicks to it. */

import { ApiClient } from "./api.js";
import { BoardState, describeMove, groupChips, statusLine } from "./state.js";

// same-origin by default; ?api=http://host:port targets a separate service
const apiBase = new URLSearchParams(window.location.search).get("api") ?? "";
const state = new BoardState(new ApiClient(apiBase), render);

function byId<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) {
    throw new Error(`missing element #${id}`);
  }
  return found as T;
}

const setupForm = byId<HTMLFormElement>("setup");
const positionInput = byId<HTMLInputElement>("position");
const engineFirstInput = byId<HTMLInputElement>("engine-first");
const statusBox = byId<HTMLDivElement>("status");
const errorBox = byId<HTMLDivElement>("error");
const boardBox = byId<HTMLDivElement>("board");
const hintButton = byId<HTMLButtonElement>("hint-toggle");
const hintBox = byId<HTMLDivElement>("hint-info");
const movesList = byId<HTMLOListElement>("moves");
const historyList = byId<HTMLOListElement>("history");

setupForm.addEventListener("submit", (event) => {
  event.preventDefault();
  void state.startGame(positionInput.value.trim(), engineFirstInput.checked);
});

hintButton.addEventListener("click", () => {
  void state.toggleHint();
});

function chipElement(label: string, count: number): HTMLSpanElement {
  const chip = document.createElement("span");
  chip.className = "chip";
  chip.textContent = label;
  if (count > 1) {
    const badge = document.createElement("sup");
    badge.className = "badge";
    badge.textContent = `×${count}`;
    chip.appendChild(badge);
  }
  return chip;
}

function render(): void {
  const session = state.session;

  statusBox.textContent = statusLine(session);
  errorBox.textContent = state.error ?? "";
  errorBox.hidden = !state.error;

  boardBox.replaceChildren();
  if (session) {
    if (session.position.components.length === 0) {
      boardBox.textContent = "nothing left";
    } else {
      for (const chip of groupChips(session.position)) {
        boardBox.appendChild(chipElement(chip.label, chip.count));
      }
    }
  }

  const playable = !!session && session.status === "in_progress" && !state.busy;
  hintButton.disabled = !playable;
  hintButton.textContent = state.hintShown ? "hide hint" : "show hint";
  hintBox.replaceChildren();
  if (state.hintShown && state.hint) {
    const advice = state.hint.winning_move
      ? `advised: ${describeMove(state.hint.winning_move)}`
      : "no winning move from here";
    hintBox.textContent = `position value ${state.hint.grundy}; ${advice}`;
  }

  movesList.replaceChildren();
  const advised = state.advisedIndex();
  for (const move of state.moves) {
    const item = document.createElement("li");
    const button = document.createElement("button");
    button.type = "button";
    button.disabled = !playable;
    button.textContent = `${describeMove(move)}  (leaves ${move.after.text})`;
    if (advised === move.index) {
      button.classList.add("advised");
    }
    button.addEventListener("click", () => {
      void state.chooseMove(move.index);
    });
    item.appendChild(button);
    movesList.appendChild(item);
  }

  historyList.replaceChildren();
  if (session) {
    for (const entry of session.history) {
      const item = document.createElement("li");
      item.textContent = `${entry.player}: ${describeMove(entry.move)}, leaving ${entry.move.after.text}`;
      historyList.appendChild(item);
    }
  }
}

render();
