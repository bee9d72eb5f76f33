/** Typed client for the decompgame HTTP service.
 *
 * Every error response from the service is `{"error": string}`; this client
 * surfaces those as ApiError with the HTTP status attached.
 */

export interface SurfaceJson {
  kind: "o" | "n";
  genus: number;
}

export interface PositionJson {
  text: string;
  components: SurfaceJson[];
  total_genus: number;
}

export interface MoveJson {
  component: SurfaceJson;
  cases: string;
  results: SurfaceJson[];
  results_text: string;
  after: PositionJson;
}

export interface IndexedMoveJson extends MoveJson {
  index: number;
}

export interface HistoryItemJson {
  player: "human" | "engine";
  move: MoveJson;
}

export type SessionStatus = "in_progress" | "human_won" | "engine_won";

export interface SessionJson {
  id: string;
  initial_position: string;
  engine_first: boolean;
  position: PositionJson;
  to_move: "human" | "engine" | null;
  status: SessionStatus;
  winner: "human" | "engine" | null;
  history: HistoryItemJson[];
}

export interface ComponentValueJson {
  surface: SurfaceJson;
  value: number;
}

export interface AnalysisJson {
  position: PositionJson;
  grundy: number;
  winning_move: MoveJson | null;
  component_values: ComponentValueJson[];
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function parseError(response: Response): Promise<never> {
  let message = `request failed with status ${response.status}`;
  try {
    const body = (await response.json()) as { error?: unknown };
    if (typeof body.error === "string") {
      message = body.error;
    }
  } catch {
    // not JSON: keep the generic message
  }
  throw new ApiError(response.status, message);
}

export class ApiClient {
  constructor(private readonly base: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(this.base + path, init);
    if (!response.ok) {
      await parseError(response);
    }
    return (await response.json()) as T;
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  createSession(position: string, engineFirst: boolean): Promise<SessionJson> {
    return this.post<SessionJson>("/sessions", {
      position,
      engine_first: engineFirst,
    });
  }

  getSession(id: string): Promise<SessionJson> {
    return this.request<SessionJson>(`/sessions/${encodeURIComponent(id)}`);
  }

  async getMoves(id: string): Promise<IndexedMoveJson[]> {
    const body = await this.request<{ moves: IndexedMoveJson[] }>(
      `/sessions/${encodeURIComponent(id)}/moves`,
    );
    return body.moves;
  }

  playMove(id: string, choice: { index: number } | { after: string }): Promise<SessionJson> {
    return this.post<SessionJson>(`/sessions/${encodeURIComponent(id)}/moves`, choice);
  }

  analyze(position: string): Promise<AnalysisJson> {
    return this.request<AnalysisJson>(`/analysis?position=${encodeURIComponent(position)}`);
  }
}
