/** Display formatting for tallies; rates always show two decimals. */

import type { SessionResult } from "./api.js";

export function formatRate(t: number): string {
  return t.toFixed(2);
}

export function formatProgress(judged: number, total: number): string {
  return `${judged + 1} / ${total}`;
}

export function verdictLabel(passed: boolean): string {
  return passed ? "PASS (T ≥ 50.00)" : "FAIL (T < 50.00)";
}

export function summaryLine(result: SessionResult): string {
  return (
    `identical x=${result.x}, detected y=${result.y}, undetected z=${result.z}, ` +
    `n=${result.n}, T=${formatRate(result.t)}%`
  );
}
