/** DOM wiring: renders the session flow into the static page. */

import { HttpJudgmentApi } from "./api.js";
import { formatProgress, formatRate, summaryLine, verdictLabel } from "./format.js";
import { SessionFlow, type FlowPhase } from "./state.js";

const api = new HttpJudgmentApi("");
const flow = new SessionFlow(api);

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

const startPanel = el<HTMLElement>("start-panel");
const judgePanel = el<HTMLElement>("judge-panel");
const resultPanel = el<HTMLElement>("result-panel");
const errorBanner = el<HTMLElement>("error-banner");

function renderKeywords(target: HTMLElement, keywords: string[]): void {
  target.replaceChildren(
    ...keywords.map((word) => {
      const chip = document.createElement("li");
      chip.textContent = word;
      return chip;
    }),
  );
}

function show(panel: HTMLElement, visible: boolean): void {
  panel.hidden = !visible;
}

function render(state: FlowPhase): void {
  show(errorBanner, state.phase === "error");
  show(startPanel, state.phase === "idle");
  show(judgePanel, state.phase === "judging");
  show(resultPanel, state.phase === "complete");

  if (state.phase === "error") {
    el("error-message").textContent = state.message;
    return;
  }
  if (state.phase === "judging") {
    const { pair } = state;
    el("tweet-text").textContent = pair.tweet;
    el("progress").textContent = formatProgress(pair.index, pair.total);
    renderKeywords(el("list-a"), pair.list_a);
    renderKeywords(el("list-b"), pair.list_b);
    return;
  }
  if (state.phase === "complete") {
    const { result } = state;
    el("result-x").textContent = String(result.x);
    el("result-y").textContent = String(result.y);
    el("result-z").textContent = String(result.z);
    el("result-n").textContent = String(result.n);
    el("result-t").textContent = `${formatRate(result.t)}%`;
    const verdict = el("result-verdict");
    verdict.textContent = verdictLabel(result.passed);
    verdict.className = result.passed ? "verdict pass" : "verdict fail";
    el("result-summary").textContent = summaryLine(result);
  }
}

flow.onChange(render);

el<HTMLFormElement>("start-form").addEventListener("submit", (event) => {
  event.preventDefault();
  const criterion = el<HTMLInputElement>("criterion").value.trim() || "unspecified";
  const seedRaw = el<HTMLInputElement>("seed").value.trim();
  const request: Parameters<SessionFlow["start"]>[0] = {
    criterion,
    dataset_id: "demo14",
  };
  if (seedRaw) {
    request.seed = Number(seedRaw);
  }
  void flow.start(request).then(() => {
    if (flow.sessionId) {
      window.sessionStorage.setItem("tweetkeys-session", flow.sessionId);
    }
  });
});

el("pick-a").addEventListener("click", () => void flow.judge("a"));
el("pick-b").addEventListener("click", () => void flow.judge("b"));
el("retry").addEventListener("click", () => void flow.retry());
el("restart").addEventListener("click", () => {
  window.sessionStorage.removeItem("tweetkeys-session");
  window.location.reload();
});

// refresh-safe: resume the stored session at whatever pair the server is on
const stored = window.sessionStorage.getItem("tweetkeys-session");
if (stored) {
  void flow.resume(stored);
} else {
  render(flow.state);
}
