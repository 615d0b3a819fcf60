/**
 * Typed client for the judgment-session HTTP API.
 *
 * Pre-completion endpoints return blinded payloads: the two keyword lists
 * are only ever `list_a` / `list_b`, with no provenance fields.
 */

export interface PairIn {
  tweet: string;
  human: string[];
  machine: string[];
}

export interface CreateSessionRequest {
  criterion: string;
  pairs?: PairIn[];
  dataset_id?: string;
  seed?: number;
}

export interface CreatedSession {
  session_id: string;
  pair_count: number;
}

export interface NextPair {
  session_id: string;
  index: number;
  total: number;
  tweet: string;
  list_a: string[];
  list_b: string[];
}

export interface NextComplete {
  complete: true;
  total: number;
}

export type NextResponse = NextPair | NextComplete;

export interface JudgmentAck {
  accepted: boolean;
  judged: number;
  total: number;
  complete: boolean;
}

export interface PairOutcome {
  index: number;
  tweet: string;
  identical: boolean;
  machine_side: "a" | "b";
  choice: "a" | "b";
  outcome: "x" | "y" | "z";
}

export interface SessionResult {
  session_id: string;
  criterion: string;
  x: number;
  y: number;
  z: number;
  n: number;
  t: number;
  passed: boolean;
  pairs: PairOutcome[];
}

export function isComplete(next: NextResponse): next is NextComplete {
  return (next as NextComplete).complete === true;
}

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
    this.name = "ApiError";
  }
}

/** The surface the session flow needs; tests substitute fakes. */
export interface JudgmentApi {
  createSession(request: CreateSessionRequest): Promise<CreatedSession>;
  nextPair(sessionId: string): Promise<NextResponse>;
  submitJudgment(sessionId: string, pairIndex: number, choice: "a" | "b"): Promise<JudgmentAck>;
  sessionResult(sessionId: string): Promise<SessionResult>;
}

export class HttpJudgmentApi implements JudgmentApi {
  constructor(private baseUrl: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      headers: { "content-type": "application/json" },
      ...init,
    });
    const body = await response.text();
    if (!response.ok) {
      let detail = body;
      try {
        detail = JSON.parse(body).detail ?? body;
      } catch {
        // not JSON: report raw text
      }
      throw new ApiError(response.status, `${response.status}: ${detail}`);
    }
    return JSON.parse(body) as T;
  }

  createSession(request: CreateSessionRequest): Promise<CreatedSession> {
    return this.request<CreatedSession>("/sessions", {
      method: "POST",
      body: JSON.stringify(request),
    });
  }

  nextPair(sessionId: string): Promise<NextResponse> {
    return this.request<NextResponse>(`/sessions/${sessionId}/next`);
  }

  submitJudgment(sessionId: string, pairIndex: number, choice: "a" | "b"): Promise<JudgmentAck> {
    return this.request<JudgmentAck>(`/sessions/${sessionId}/judgments`, {
      method: "POST",
      body: JSON.stringify({ pair_index: pairIndex, choice }),
    });
  }

  sessionResult(sessionId: string): Promise<SessionResult> {
    return this.request<SessionResult>(`/sessions/${sessionId}/result`);
  }
}
