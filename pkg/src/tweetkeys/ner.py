"""Gazetteer- and pattern-based entity labeling into seven classes.

Pattern classes (MONEY, PERCENT, clock/ordinal/year shapes) are checked
before gazetteer classes; gazetteer lookup keys on the lemma when present,
falling back to the norm form.  Every token gets exactly one label, NONE
when nothing matches.  DATE and TIME are the classes that matter downstream
(they drive time-indicator removal); the others ship with seed coverage.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from pathlib import Path

from .model import NerLabel, TaggedToken
from .tagger import TaggedTweet

_GAZETTEER_CLASSES = (
    NerLabel.LOCATION,
    NerLabel.PERSON,
    NerLabel.ORGANIZATION,
    NerLabel.DATE,
    NerLabel.TIME,
)

_CLOCK_RE = re.compile(r"\d{1,2}:\d{2}(?:[ap]m)?|\d{1,2}(?:[ap]m)")
_MERIDIEM = {"am", "pm", "a.m", "p.m"}
_ORDINAL_RE = re.compile(r"\d{1,2}(?:st|nd|rd|th)")
_YEAR_RE = re.compile(r"(?:19|20)\d\d")
_NUMBER_RE = re.compile(r"\d+(?:[.,]\d+)*")
_CURRENCY = {"$", "€", "£", "¥", "rs", "rs.", "usd", "lkr", "rupees", "rupee", "dollars", "dollar"}


class GazetteerError(ValueError):
    """Gazetteer file invalid: bad line, unknown class, or class overlap."""


@dataclass(frozen=True)
class Gazetteer:
    """Per-class lowercase term sets; sets are pairwise disjoint by contract."""

    terms: dict[NerLabel, frozenset[str]]

    def __post_init__(self):
        seen: dict[str, NerLabel] = {}
        for label in _GAZETTEER_CLASSES:
            for term in self.terms.get(label, frozenset()):
                if term in seen:
                    raise GazetteerError(
                        f"term {term!r} listed under both {seen[term].value} and {label.value}"
                    )
                seen[term] = label

    @classmethod
    def from_text(cls, text: str, origin: str = "<string>") -> "Gazetteer":
        """Parse ``CLASS<TAB>term`` lines; ``#`` comments and blanks ignored."""
        sets: dict[NerLabel, set[str]] = {label: set() for label in _GAZETTEER_CLASSES}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            cols = raw.split("\t")
            if len(cols) < 2 or not cols[1].strip():
                raise GazetteerError(f"{origin}:{lineno}: expected CLASS<TAB>term")
            name = cols[0].strip().upper()
            try:
                label = NerLabel[name]
            except KeyError:
                raise GazetteerError(f"{origin}:{lineno}: unknown class {name!r}") from None
            if label not in sets:
                raise GazetteerError(
                    f"{origin}:{lineno}: class {name} is pattern-based, not gazetteer-based"
                )
            sets[label].add(cols[1].strip().casefold())
        return cls(terms={label: frozenset(terms) for label, terms in sets.items()})

    @classmethod
    def load(cls, path: str | Path) -> "Gazetteer":
        p = Path(path)
        return cls.from_text(p.read_text(encoding="utf-8"), origin=str(p))

    def lookup(self, key: str) -> NerLabel:
        for label in _GAZETTEER_CLASSES:
            if key in self.terms[label]:
                return label
        return NerLabel.NONE


def _is_number(norm: str) -> bool:
    return bool(_NUMBER_RE.fullmatch(norm))


def _pattern_label(
    norm: str, prev: TaggedToken | None, nxt: TaggedToken | None
) -> NerLabel:
    prev_norm = prev.norm if prev is not None else ""
    next_norm = nxt.norm if nxt is not None else ""
    if norm == "%" and _is_number(prev_norm):
        return NerLabel.PERCENT
    if _is_number(norm) and next_norm == "%":
        return NerLabel.PERCENT
    if norm in _CURRENCY and _is_number(next_norm):
        return NerLabel.MONEY
    if _is_number(norm) and prev_norm in _CURRENCY:
        return NerLabel.MONEY
    if _CLOCK_RE.fullmatch(norm):
        return NerLabel.TIME
    if norm in _MERIDIEM and _is_number(prev_norm):
        return NerLabel.TIME
    if _is_number(norm) and next_norm in _MERIDIEM:
        return NerLabel.TIME
    if _ORDINAL_RE.fullmatch(norm) or _YEAR_RE.fullmatch(norm):
        return NerLabel.DATE
    return NerLabel.NONE


def classify(tweet: TaggedTweet, gazetteer: Gazetteer) -> TaggedTweet:
    """Return the tweet with exactly one NerLabel assigned per token."""
    tokens = tweet.tokens
    labeled: list[TaggedToken] = []
    for i, tok in enumerate(tokens):
        prev = tokens[i - 1] if i > 0 else None
        nxt = tokens[i + 1] if i + 1 < len(tokens) else None
        label = _pattern_label(tok.norm, prev, nxt)
        if label is NerLabel.NONE:
            label = gazetteer.lookup(tok.lemma or tok.norm)
        labeled.append(replace(tok, ner=label))
    return TaggedTweet(tuple(labeled))
