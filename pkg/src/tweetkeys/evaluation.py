"""Evaluation instruments: precision/recall/F1 against human keyword sets,
and blind-judgment session accounting.

A judgment session presents a supervisor with N (tweet, keyword-list A,
keyword-list B) pairs where one list is machine output, and tallies

    x  pairs whose machine and human lists are set-equal,
    y  non-identical pairs where the supervisor picked the machine list,
    z  non-identical pairs where the supervisor picked the human list,

with success rate T = (x + z) / n * 100, reported to two decimals.  A test
case passes at T >= 50.00.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from typing import Iterable, Sequence

from .model import KeywordList

PASS_THRESHOLD = 50.0


def round2(value: float) -> float:
    """Round half-up to two decimals, the way the report tables do."""
    return float(Decimal(str(value)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


class SessionOpenError(RuntimeError):
    """Tally requested before every pair was judged."""


@dataclass(frozen=True)
class EvalScores:
    """Scores for one machine-vs-human keyword comparison."""

    precision: float
    recall: float
    f1: float
    true_positives: int
    machine_count: int
    human_count: int

    @classmethod
    def from_pr(
        cls,
        precision: float,
        recall: float,
        true_positives: int = 0,
        machine_count: int = 0,
        human_count: int = 0,
    ) -> "EvalScores":
        if precision + recall > 0:
            f1 = 2 * precision * recall / (precision + recall)
        else:
            f1 = 0.0
        return cls(precision, recall, f1, true_positives, machine_count, human_count)


def _texts(keywords: KeywordList | Iterable[str]) -> set[str]:
    if isinstance(keywords, KeywordList):
        return {k.text.casefold() for k in keywords}
    return {str(k).casefold() for k in keywords}


def score(machine: KeywordList | Iterable[str], human: Iterable[str]) -> EvalScores:
    """Text-only, case-folded set comparison; duplicates count once.

    Both sides empty scores 1.0 across the board by convention; exactly one
    empty side scores zero.
    """
    machine_set = _texts(machine)
    human_set = _texts(human)
    tp = len(machine_set & human_set)
    if not machine_set and not human_set:
        return EvalScores(1.0, 1.0, 1.0, 0, 0, 0)
    precision = tp / len(machine_set) if machine_set else 0.0
    recall = tp / len(human_set) if human_set else 0.0
    return EvalScores.from_pr(
        precision, recall, tp, len(machine_set), len(human_set)
    )


def average_scores(scores: Sequence[EvalScores]) -> EvalScores:
    """Arithmetic means of P, R and F1 (mean of per-tweet F1 values, not the
    F1 of the means); counts are summed."""
    if not scores:
        raise ValueError("average_scores: empty input")
    n = len(scores)
    return EvalScores(
        precision=sum(s.precision for s in scores) / n,
        recall=sum(s.recall for s in scores) / n,
        f1=sum(s.f1 for s in scores) / n,
        true_positives=sum(s.true_positives for s in scores),
        machine_count=sum(s.machine_count for s in scores),
        human_count=sum(s.human_count for s in scores),
    )


@dataclass(frozen=True)
class TuringTally:
    x: int
    y: int
    z: int
    n: int

    def __post_init__(self):
        if self.x + self.y + self.z != self.n:
            raise ValueError(
                f"tally does not conserve: {self.x}+{self.y}+{self.z} != {self.n}"
            )

    @property
    def t(self) -> float:
        """Success rate in percent, rounded to two decimals."""
        if self.n == 0:
            return 0.0
        return round2((self.x + self.z) / self.n * 100.0)

    @property
    def passed(self) -> bool:
        return self.t >= PASS_THRESHOLD


@dataclass(frozen=True)
class SessionPair:
    tweet: str
    human: tuple[str, ...]
    machine: tuple[str, ...]

    @property
    def identical(self) -> bool:
        return _texts(self.human) == _texts(self.machine)


SIDES = ("a", "b")


@dataclass
class TuringSession:
    """One supervisor session; judgments are sequential and final."""

    session_id: str
    criterion: str
    pairs: tuple[SessionPair, ...]
    machine_sides: tuple[str, ...]
    seed: int | None = None
    judgments: dict[int, str] = field(default_factory=dict)

    def __post_init__(self):
        if not self.pairs:
            raise ValueError("session needs at least one pair")
        if len(self.machine_sides) != len(self.pairs):
            raise ValueError("one machine side per pair required")

    @property
    def n(self) -> int:
        return len(self.pairs)

    @property
    def complete(self) -> bool:
        return len(self.judgments) == self.n

    @property
    def next_index(self) -> int | None:
        return None if self.complete else len(self.judgments)

    def presented_lists(self, index: int) -> tuple[tuple[str, ...], tuple[str, ...]]:
        """(list_a, list_b) for a pair, machine placed per its assigned side."""
        pair = self.pairs[index]
        if self.machine_sides[index] == "a":
            return pair.machine, pair.human
        return pair.human, pair.machine

    def judge(self, index: int, choice: str) -> None:
        if choice not in SIDES:
            raise ValueError(f"choice must be one of {SIDES}, got {choice!r}")
        if self.complete:
            raise ValueError("session already complete")
        if index != len(self.judgments):
            raise ValueError(
                f"judgment out of order: expected pair {len(self.judgments)}, got {index}"
            )
        self.judgments[index] = choice

    def pair_outcome(self, index: int) -> str:
        """'x' for identical pairs; otherwise 'y' when the supervisor found
        the machine list, 'z' when they did not."""
        pair = self.pairs[index]
        if pair.identical:
            return "x"
        return "y" if self.judgments[index] == self.machine_sides[index] else "z"


def new_session(
    session_id: str,
    criterion: str,
    pairs: Sequence[SessionPair],
    seed: int | None = None,
) -> TuringSession:
    """Create a session with per-pair machine sides drawn from ``seed``."""
    rng = random.Random(seed)
    sides = tuple(rng.choice(SIDES) for _ in pairs)
    return TuringSession(
        session_id=session_id,
        criterion=criterion,
        pairs=tuple(pairs),
        machine_sides=sides,
        seed=seed,
    )


def tally(session: TuringSession) -> TuringTally:
    """Tallies for a COMPLETE session; raises SessionOpenError otherwise."""
    if not session.complete:
        raise SessionOpenError(
            f"session {session.session_id}: {len(session.judgments)}/{session.n} judged"
        )
    x = y = z = 0
    for i in range(session.n):
        outcome = session.pair_outcome(i)
        if outcome == "x":
            x += 1
        elif outcome == "y":
            y += 1
        else:
            z += 1
    return TuringTally(x=x, y=y, z=z, n=session.n)


@dataclass(frozen=True)
class Verdict:
    passed: int
    failed: int

    @property
    def success_rate(self) -> float:
        total = self.passed + self.failed
        return round2(self.passed / total * 100.0)


def pass_verdict(tallies: Sequence[TuringTally]) -> Verdict:
    """Pass/fail summary over one tally per test case."""
    if not tallies:
        raise ValueError("pass_verdict: empty input")
    passed = sum(1 for t in tallies if t.passed)
    return Verdict(passed=passed, failed=len(tallies) - passed)
