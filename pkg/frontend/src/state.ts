/**
 * Session flow state machine, kept free of DOM concerns so it can be driven
 * headlessly in tests and end-to-end scripts.
 *
 * Phases: idle -> loading -> judging (one pair at a time) -> complete.
 * Any API failure lands in the error phase with a retry that re-resolves the
 * current state from the server, so a refresh or transient network failure
 * never loses the session.
 */

import {
  ApiError,
  isComplete,
  type CreateSessionRequest,
  type JudgmentApi,
  type NextPair,
  type SessionResult,
} from "./api.js";

export type FlowPhase =
  | { phase: "idle" }
  | { phase: "loading" }
  | { phase: "judging"; pair: NextPair }
  | { phase: "complete"; result: SessionResult }
  | { phase: "error"; message: string };

export type Listener = (state: FlowPhase) => void;

export class SessionFlow {
  private current: FlowPhase = { phase: "idle" };
  private listeners: Listener[] = [];
  private submitting = false;
  sessionId: string | null = null;

  constructor(private api: JudgmentApi) {}

  get state(): FlowPhase {
    return this.current;
  }

  onChange(listener: Listener): void {
    this.listeners.push(listener);
  }

  private setState(state: FlowPhase): void {
    this.current = state;
    for (const listener of this.listeners) {
      listener(state);
    }
  }

  async start(request: CreateSessionRequest): Promise<void> {
    this.setState({ phase: "loading" });
    try {
      const created = await this.api.createSession(request);
      this.sessionId = created.session_id;
      await this.advance();
    } catch (error) {
      this.fail(error);
    }
  }

  /** Re-attach to an existing session (page refresh keeps the session id). */
  async resume(sessionId: string): Promise<void> {
    this.sessionId = sessionId;
    this.setState({ phase: "loading" });
    await this.advance().catch((error) => this.fail(error));
  }

  /**
   * Record the supervisor's pick for the current pair.  No-op unless a pair
   * is displayed, and while a submission is in flight (double-click guard).
   */
  async judge(choice: "a" | "b"): Promise<void> {
    if (this.current.phase !== "judging" || this.submitting || !this.sessionId) {
      return;
    }
    const pair = this.current.pair;
    this.submitting = true;
    try {
      await this.api.submitJudgment(this.sessionId, pair.index, choice);
      await this.advance();
    } catch (error) {
      if (error instanceof ApiError && error.status === 409) {
        // the server already has this judgment; just re-sync
        await this.advance().catch((inner) => this.fail(inner));
      } else {
        this.fail(error);
      }
    } finally {
      this.submitting = false;
    }
  }

  /** From the error phase: re-resolve current state without losing the session. */
  async retry(): Promise<void> {
    if (!this.sessionId) {
      this.setState({ phase: "idle" });
      return;
    }
    this.setState({ phase: "loading" });
    await this.advance().catch((error) => this.fail(error));
  }

  private async advance(): Promise<void> {
    if (!this.sessionId) {
      throw new Error("no active session");
    }
    const next = await this.api.nextPair(this.sessionId);
    if (isComplete(next)) {
      const result = await this.api.sessionResult(this.sessionId);
      this.setState({ phase: "complete", result });
    } else {
      this.setState({ phase: "judging", pair: next });
    }
  }

  private fail(error: unknown): void {
    const message = error instanceof Error ? error.message : String(error);
    this.setState({ phase: "error", message });
  }
}
