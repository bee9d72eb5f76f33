/** UI state and pure presentation helpers, kept free of DOM access. */

import type {
  AnalysisJson,
  ApiClient,
  IndexedMoveJson,
  PositionJson,
  SessionJson,
  SurfaceJson,
} from "./api.js";
import { ApiError } from "./api.js";

export function surfaceLabel(surface: SurfaceJson): string {
  return `${surface.kind}${surface.genus}`;
}

export interface Chip {
  kind: "o" | "n";
  genus: number;
  label: string;
  count: number;
}

/** Collapse equal components into one chip with a multiplicity count. */
export function groupChips(position: PositionJson): Chip[] {
  const chips: Chip[] = [];
  for (const s of position.components) {
    const last = chips[chips.length - 1];
    if (last && last.kind === s.kind && last.genus === s.genus) {
      last.count += 1;
    } else {
      chips.push({ kind: s.kind, genus: s.genus, label: surfaceLabel(s), count: 1 });
    }
  }
  return chips;
}

export function statusLine(session: SessionJson | null): string {
  if (!session) {
    return "no game yet";
  }
  switch (session.status) {
    case "human_won":
      return "you made the last move. you win!";
    case "engine_won":
      return "engine made the last move. engine wins.";
    default:
      return session.to_move === "human" ? "your move" : "engine is thinking";
  }
}

export function describeMove(move: { component: SurfaceJson; results_text: string }): string {
  return `${surfaceLabel(move.component)} → ${move.results_text}`;
}

/** The whole client-side game state; notifies the view after every change. */
export class BoardState {
  session: SessionJson | null = null;
  moves: IndexedMoveJson[] = [];
  hint: AnalysisJson | null = null;
  hintShown = false;
  error: string | null = null;
  busy = false;

  constructor(
    private readonly api: ApiClient,
    private readonly onChange: () => void = () => {},
  ) {}

  async startGame(positionText: string, engineFirst: boolean): Promise<void> {
    await this.run(async () => {
      this.session = await this.api.createSession(positionText, engineFirst);
      this.hint = null;
      this.hintShown = false;
      await this.reloadMoves();
    });
  }

  async chooseMove(index: number): Promise<void> {
    const session = this.session;
    if (!session || this.busy) {
      return;
    }
    await this.run(async () => {
      this.session = await this.api.playMove(session.id, { index });
      this.hint = null; // stale after any move
      await this.reloadMoves();
    });
  }

  /** Show or hide the advice for the current position (fetched on demand). */
  async toggleHint(): Promise<void> {
    if (this.hintShown) {
      this.hintShown = false;
      this.onChange();
      return;
    }
    const session = this.session;
    if (!session) {
      return;
    }
    await this.run(async () => {
      if (!this.hint || this.hint.position.text !== session.position.text) {
        this.hint = await this.api.analyze(session.position.text);
      }
      this.hintShown = true;
    });
  }

  /** Index of the advised move in the current move list, or null. */
  advisedIndex(): number | null {
    if (!this.hintShown || !this.hint || !this.hint.winning_move) {
      return null;
    }
    const target = this.hint.winning_move.after.text;
    const match = this.moves.find((m) => m.after.text === target);
    return match ? match.index : null;
  }

  private async reloadMoves(): Promise<void> {
    this.moves = this.session ? await this.api.getMoves(this.session.id) : [];
  }

  private async run(action: () => Promise<void>): Promise<void> {
    this.busy = true;
    this.error = null;
    this.onChange();
    try {
      await action();
    } catch (err) {
      this.error = err instanceof ApiError ? err.message : `unexpected error: ${String(err)}`;
    } finally {
      this.busy = false;
      this.onChange();
    }
  }
}
