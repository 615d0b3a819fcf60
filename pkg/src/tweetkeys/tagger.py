"""Deterministic POS tagging.

The bundled tagger is a lexicon + suffix-heuristic tagger with a one-token
left-context fallback; Twitter markers (@user, #tag, URLs) short-circuit
everything else.  It is not a learned model: the import adapter below is the
road to higher-accuracy external taggers, whose output can be fed into the
pipeline verbatim.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from pathlib import Path

from .model import PennTag, TaggedToken, Token
from .tokenizer import looks_like_url

log = logging.getLogger(__name__)

_APOSTROPHES = str.maketrans({"’": "'", "`": "'"})
_NUMBER_RE = re.compile(r"[+-]?\d+(?:[.,:/]\d+)*")
_ALNUM_RE = re.compile(r"\w")

# tags that count as nominal left context for the fallback rules
_NOUNISH = {PennTag.NN, PennTag.NNS, PennTag.NNP, PennTag.NNPS}
_NOUN_TRIGGERS = {PennTag.DT, PennTag.JJ, PennTag.PRP_DOLLAR}
_VERB_TRIGGERS = {PennTag.PRP} | _NOUNISH


class TaggedTextError(ValueError):
    """A line of tagged text had no tag column."""

    def __init__(self, lineno: int, line: str):
        super().__init__(f"line {lineno}: expected surface<TAB>TAG, got {line!r}")
        self.lineno = lineno


class AccuracyInputError(ValueError):
    """Token accuracy called on sequences that do not line up."""


@dataclass(frozen=True)
class TagLexicon:
    """Word list with ranked tags, ordered suffix rules, and a default tag."""

    entries: dict[str, tuple[PennTag, ...]]
    suffix_rules: tuple[tuple[str, PennTag], ...]
    default_tag: PennTag = PennTag.NN

    @classmethod
    def from_text(cls, text: str, origin: str = "<string>") -> "TagLexicon":
        """Parse ``word<TAB>TAG[,TAG...]`` lines; ``#`` starts a comment."""
        entries: dict[str, tuple[PennTag, ...]] = {}
        suffix_rules: list[tuple[str, PennTag]] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            cols = raw.split("\t")
            if len(cols) < 2:
                raise ValueError(f"{origin}:{lineno}: expected word<TAB>TAG[,TAG...]")
            word = cols[0].translate(_APOSTROPHES).casefold()
            tags = tuple(PennTag.parse(t.strip()) for t in cols[1].split(",") if t.strip())
            if not tags:
                raise ValueError(f"{origin}:{lineno}: no tags for {word!r}")
            if word.startswith("-") and len(word) > 1:
                suffix_rules.append((word[1:], tags[0]))
            else:
                entries[word] = tags
        return cls(entries=entries, suffix_rules=tuple(suffix_rules))

    @classmethod
    def load(cls, path: str | Path) -> "TagLexicon":
        p = Path(path)
        return cls.from_text(p.read_text(encoding="utf-8"), origin=str(p))


@dataclass(frozen=True)
class TaggedTweet:
    """The tagged token sequence for one tweet."""

    tokens: tuple[TaggedToken, ...]

    def __iter__(self):
        return iter(self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    def __getitem__(self, i):
        return self.tokens[i]


def _verb_by_suffix(norm: str) -> PennTag:
    if norm.endswith("ing"):
        return PennTag.VBG
    if norm.endswith("ed"):
        return PennTag.VBD
    if norm.endswith("s"):
        return PennTag.VBZ
    return PennTag.VB


def _noun_by_suffix(norm: str) -> PennTag:
    if norm.endswith("s") and not norm.endswith("ss") and len(norm) > 3:
        return PennTag.NNS
    return PennTag.NN


def _tag_one(token: Token, prev: PennTag | None, lexicon: TagLexicon) -> PennTag:
    norm = token.norm.translate(_APOSTROPHES)
    if norm.startswith("@") and len(norm) > 1:
        return PennTag.USR
    if norm.startswith("#") and len(norm) > 1:
        return PennTag.HT
    if looks_like_url(norm):
        return PennTag.URL
    if _NUMBER_RE.fullmatch(norm):
        return PennTag.CD
    if not _ALNUM_RE.search(norm):
        return PennTag.SYM

    entry = lexicon.entries.get(norm)
    if entry:
        # the one context-disambiguated lexicon case: "'s" after a noun is
        # the possessive marker, not a verb
        if norm == "'s" and PennTag.POS in entry and prev in _NOUNISH:
            return PennTag.POS
        return entry[0]

    for suffix, tag in lexicon.suffix_rules:
        if norm.endswith(suffix) and len(norm) >= len(suffix) + 2:
            return tag
    if token.surface[:1].isupper() and token.surface[1:2].islower() and token.position > 0:
        return PennTag.NNP
    if prev in _NOUN_TRIGGERS:
        return _noun_by_suffix(norm)
    if prev in _VERB_TRIGGERS:
        return _verb_by_suffix(norm)
    return lexicon.default_tag


def tag(tokens: list[Token], lexicon: TagLexicon) -> TaggedTweet:
    """Assign exactly one tag per token; unknowns resolve via the fallback chain."""
    tagged: list[TaggedToken] = []
    prev: PennTag | None = None
    for token in tokens:
        t = _tag_one(token, prev, lexicon)
        tagged.append(TaggedToken(token=token, tag=t))
        prev = t
    return TaggedTweet(tuple(tagged))


def import_tagged(text: str) -> list[TaggedTweet]:
    """Parse externally tagged text: ``surface<TAB>TAG`` lines, blank line
    between tweets, ``#`` comments.  Unknown tag codes map to SYM with a
    recorded warning; a line without a tag column raises TaggedTextError.
    """
    tweets: list[TaggedTweet] = []
    current: list[TaggedToken] = []

    def flush() -> None:
        if current:
            tweets.append(TaggedTweet(tuple(current)))
            current.clear()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.startswith("#"):
            continue
        if not raw.strip():
            flush()
            continue
        cols = raw.split("\t")
        if len(cols) < 2 or not cols[0] or not cols[1].strip():
            raise TaggedTextError(lineno, raw)
        surface, code = cols[0], cols[1].strip()
        try:
            ptag = PennTag.parse(code)
        except ValueError:
            log.warning("line %d: unknown tag code %r mapped to SYM", lineno, code)
            ptag = PennTag.SYM
        token = Token(surface=surface, norm=surface.casefold(), position=len(current))
        current.append(TaggedToken(token=token, tag=ptag))
    flush()
    return tweets


def token_accuracy(predicted: TaggedTweet, gold: TaggedTweet) -> float:
    """Fraction of positions whose tags agree; 1.0 for empty input."""
    if len(predicted) != len(gold):
        raise AccuracyInputError(
            f"token counts differ: {len(predicted)} vs {len(gold)}"
        )
    for p, g in zip(predicted, gold):
        if p.surface != g.surface:
            raise AccuracyInputError(
                f"surfaces differ at position {p.position}: {p.surface!r} vs {g.surface!r}"
            )
    if not len(gold):
        return 1.0
    matches = sum(1 for p, g in zip(predicted, gold) if p.tag is g.tag)
    return matches / len(gold)
