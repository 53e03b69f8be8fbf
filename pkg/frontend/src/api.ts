import type {
  HintResponse,
  MoveResponse,
  NewSessionRequest,
  PuzzleClient,
  ServiceErrorDetail,
  SessionState,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: ServiceErrorDetail | null,
  ) {
    super(detail?.reason ?? detail?.error ?? `HTTP ${status}`);
    this.name = "ApiError";
  }
}

async function throwApiError(res: Response): Promise<never> {
  let detail: ServiceErrorDetail | null = null;
  try {
    const body = (await res.json()) as { detail?: ServiceErrorDetail };
    detail = body.detail ?? null;
  } catch {
    // non-JSON error body; keep status only
  }
  throw new ApiError(res.status, detail);
}

export class PuzzleApi implements PuzzleClient {
  constructor(readonly baseUrl: string) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await fetch(`${this.baseUrl}${path}`, init);
    if (!res.ok) await throwApiError(res);
    return res.json() as Promise<T>;
  }

  private post<T>(path: string, body?: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: body === undefined ? "{}" : JSON.stringify(body),
    });
  }

  createSession(req: NewSessionRequest): Promise<SessionState> {
    return this.post("/sessions", req);
  }

  getState(id: string): Promise<SessionState> {
    return this.request(`/sessions/${id}`);
  }

  applyMove(id: string, row: number): Promise<MoveResponse> {
    return this.post(`/sessions/${id}/moves`, { row });
  }

  undo(id: string): Promise<SessionState> {
    return this.post(`/sessions/${id}/undo`);
  }

  hint(id: string): Promise<HintResponse> {
    return this.request(`/sessions/${id}/hint`);
  }
}
