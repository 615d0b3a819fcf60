"""The keyword-extraction chain.

Stage 2 order: tokenize -> tag -> entity labeling -> time-indicator removal
-> contraction expansion -> noun/verb/negation selection -> reject-list
filtering -> auxiliary filtering -> domain-keyword inclusion -> dedup.

Stage 1 is the baseline chain: no entity labeling, no contraction expansion,
no negation retention, and no dedup, so duplicates and time indicators
survive in its output.  Each stage is a standalone function so the chain can
be tested (and traced) piecewise.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

from .corpora import CorpusStore, contains
from .lemmatizer import LemmaRules
from .model import (
    Keyword,
    KeywordList,
    KeywordSource,
    Mode,
    NerLabel,
    PennTag,
    TagCategory,
    TaggedToken,
    Token,
    tag_category,
)
from .ner import Gazetteer, classify
from .tagger import TagLexicon, TaggedTweet, tag
from .tokenizer import TokenizerConfig, tokenize

NEGATION_LEMMAS = frozenset({"not", "never", "no"})

_TIME_CLASSES = frozenset({NerLabel.DATE, NerLabel.TIME})

# stage names.  Stage 1 runs the subset without time_filter/expansion/dedup.
STAGE_TAGGING = "tagging"
STAGE_TIME_FILTER = "time_filter"
STAGE_EXPANSION = "contraction_expansion"
STAGE_SELECTION = "selection"
STAGE_NOISE = "noise_rejection"
STAGE_AUXILIARY = "auxiliary_rejection"
STAGE_DSK = "dsk_inclusion"
STAGE_DEDUP = "dedup"

KEPT = "kept"
REMOVED = "removed"
ADDED = "added"
REWRITTEN = "rewritten"


@dataclass(frozen=True)
class PipelineConfig:
    mode: Mode
    store: CorpusStore
    lexicon: TagLexicon
    rules: LemmaRules
    gazetteer: Gazetteer
    keep_trace: bool = False
    tokenizer: TokenizerConfig = TokenizerConfig()


@dataclass(frozen=True)
class TraceEntry:
    text: str
    tag: str
    action: str


@dataclass(frozen=True)
class StageTrace:
    stage: str
    entries: tuple[TraceEntry, ...]


@dataclass(frozen=True)
class PipelineTrace:
    stages: tuple[StageTrace, ...]

    def stage(self, name: str) -> StageTrace:
        for s in self.stages:
            if s.stage == name:
                return s
        raise KeyError(name)


@dataclass(frozen=True)
class Candidate:
    """A keyword candidate flowing between the filter stages."""

    text: str
    tag: PennTag
    source: KeywordSource
    token: TaggedToken | None = None

    @property
    def identity(self) -> tuple[str, str]:
        return (self.text, self.tag.code)

    @property
    def lemma(self) -> str:
        if self.token is not None and self.token.lemma:
            return self.token.lemma
        return self.text


@dataclass(frozen=True)
class Extraction:
    keywords: KeywordList
    trace: PipelineTrace | None = None


class _Tracer:
    def __init__(self, enabled: bool):
        self.enabled = enabled
        self.stages: list[StageTrace] = []

    def record(self, stage: str, entries: list[tuple[str, PennTag, str]]) -> None:
        if self.enabled:
            self.stages.append(
                StageTrace(
                    stage,
                    tuple(TraceEntry(text, tag.code, action) for text, tag, action in entries),
                )
            )

    def build(self) -> PipelineTrace | None:
        return PipelineTrace(tuple(self.stages)) if self.enabled else None


def remove_time_indicators(tweet: TaggedTweet) -> TaggedTweet:
    """Drop DATE/TIME-labeled tokens, preserving everything else in order."""
    return TaggedTweet(tuple(t for t in tweet if t.ner not in _TIME_CLASSES))


def expand_contractions_stage(tweet: TaggedTweet, rules: LemmaRules) -> TaggedTweet:
    """Replace every clitic token by its expansion; order is preserved."""
    out: list[TaggedToken] = []
    tokens = tweet.tokens
    for i, tok in enumerate(tokens):
        nxt = tokens[i + 1] if i + 1 < len(tokens) else None
        out.extend(rules.expand(tok, nxt))
    return TaggedTweet(tuple(out))


def select_candidates(tweet: TaggedTweet, mode: Mode) -> list[Candidate]:
    """Keep noun- and verb-tagged tokens; in stage 2 also negation adverbs."""
    selected: list[Candidate] = []
    for tok in tweet:
        cat = tag_category(tok.tag)
        if cat in (TagCategory.NOUN, TagCategory.VERB):
            selected.append(
                Candidate(tok.norm, tok.tag, KeywordSource.SELECTED, tok)
            )
        elif (
            mode is Mode.STAGE2
            and cat is TagCategory.ADVERB
            and (tok.lemma or tok.norm) in NEGATION_LEMMAS
        ):
            selected.append(
                Candidate(tok.norm, tok.tag, KeywordSource.NEGATION_REINSERTED, tok)
            )
    return selected


def reject_noise(candidates: list[Candidate], store: CorpusStore) -> list[Candidate]:
    """Drop candidates found in the reject corpus."""
    return [c for c in candidates if not contains(store.reject, c.text)]


def reject_auxiliaries(candidates: list[Candidate], store: CorpusStore) -> list[Candidate]:
    """Drop verb candidates whose lemma is an auxiliary, unless that candidate
    is the only verb-category candidate (the copular/main-verb fallback)."""
    verbs = [c for c in candidates if tag_category(c.tag) is TagCategory.VERB]
    if len(verbs) == 1:
        return list(candidates)
    return [
        c
        for c in candidates
        if tag_category(c.tag) is not TagCategory.VERB
        or not contains(store.auxiliaries, c.lemma)
    ]


def include_domain_keywords(
    tweet: TaggedTweet, candidates: list[Candidate], store: CorpusStore
) -> list[Candidate]:
    """Append tweet n-grams (n <= 3) matching DSK terms that no candidate
    already covers.  Hashtag tokens match with the leading "#" stripped."""
    present = {c.text for c in candidates}
    norms = [t.norm.lstrip("#") for t in tweet]
    out = list(candidates)
    for i, tok in enumerate(tweet):
        for n in (1, 2, 3):
            if i + n > len(norms):
                break
            text = " ".join(norms[i : i + n])
            if not text or text in present:
                continue
            if contains(store.dsk, text):
                tag_ = tok.tag if n == 1 else PennTag.NN
                out.append(
                    Candidate(text, tag_, KeywordSource.DSK_INCLUDED, tok if n == 1 else None)
                )
                present.add(text)
    return out


def dedupe(candidates: list[Candidate]) -> list[Candidate]:
    """Keep the first occurrence of each (text, tag) pair, preserving order."""
    seen: set[tuple[str, str]] = set()
    out: list[Candidate] = []
    for c in candidates:
        if c.identity not in seen:
            seen.add(c.identity)
            out.append(c)
    return out


def _with_lemmas(tweet: TaggedTweet, rules: LemmaRules) -> TaggedTweet:
    return TaggedTweet(
        tuple(
            replace(t, lemma=rules.lemma(t.norm, t.tag)) if t.norm else t
            for t in tweet
        )
    )


def _trace_filter(
    tracer: _Tracer, stage: str, before: list[Candidate], after: list[Candidate]
) -> None:
    kept = {id(c) for c in after}
    tracer.record(
        stage,
        [(c.text, c.tag, KEPT if id(c) in kept else REMOVED) for c in before],
    )


def extract(tweet_text: str, config: PipelineConfig) -> Extraction:
    """Run the full chain for one tweet; extraction itself is total."""
    tracer = _Tracer(config.keep_trace)
    tokens = tokenize(tweet_text, config.tokenizer)
    tagged = tag(tokens, config.lexicon)
    tagged = _with_lemmas(tagged, config.rules)
    tracer.record(STAGE_TAGGING, [(t.norm, t.tag, KEPT) for t in tagged])

    if config.mode is Mode.STAGE2:
        labeled = classify(tagged, config.gazetteer)
        filtered = remove_time_indicators(labeled)
        survived = {id(t) for t in filtered}
        tracer.record(
            STAGE_TIME_FILTER,
            [(t.norm, t.tag, KEPT if id(t) in survived else REMOVED) for t in labeled],
        )
        expanded = expand_contractions_stage(filtered, config.rules)
        expanded_ids = {id(t) for t in expanded}
        expanded_positions = {t.position for t in expanded}

        def _expansion_action(t: TaggedToken) -> str:
            if id(t) in expanded_ids:
                return KEPT
            return REWRITTEN if t.position in expanded_positions else REMOVED

        tracer.record(
            STAGE_EXPANSION,
            [(t.norm, t.tag, _expansion_action(t)) for t in filtered],
        )
        stream = expanded
    else:
        stream = tagged

    selected = select_candidates(stream, config.mode)
    chosen = {id(c.token) for c in selected}
    tracer.record(
        STAGE_SELECTION,
        [(t.norm, t.tag, KEPT if id(t) in chosen else REMOVED) for t in stream],
    )

    after_noise = reject_noise(selected, config.store)
    _trace_filter(tracer, STAGE_NOISE, selected, after_noise)

    after_aux = reject_auxiliaries(after_noise, config.store)
    _trace_filter(tracer, STAGE_AUXILIARY, after_noise, after_aux)

    with_dsk = include_domain_keywords(stream, after_aux, config.store)
    tracer.record(
        STAGE_DSK,
        [
            (c.text, c.tag, KEPT if i < len(after_aux) else ADDED)
            for i, c in enumerate(with_dsk)
        ],
    )

    final = with_dsk
    if config.mode is Mode.STAGE2:
        final = dedupe(with_dsk)
        _trace_filter(tracer, STAGE_DEDUP, with_dsk, final)

    keywords = KeywordList(
        tweet=tweet_text,
        keywords=tuple(Keyword(c.text, c.tag, c.source) for c in final),
        mode=config.mode,
    )
    return Extraction(keywords=keywords, trace=tracer.build())


def to_json_dict(extraction: Extraction) -> dict:
    """The wire shape: field names here are part of the external interface."""
    result: dict = {
        "tweet": extraction.keywords.tweet,
        "mode": extraction.keywords.mode.value,
        "keywords": [
            {"text": k.text, "tag": k.tag.code, "source": k.source.value}
            for k in extraction.keywords
        ],
    }
    if extraction.trace is not None:
        result["trace"] = [
            {
                "stage": s.stage,
                "entries": [
                    {"text": e.text, "tag": e.tag, "action": e.action}
                    for e in s.entries
                ],
            }
            for s in extraction.trace.stages
        ]
    return result


def to_json(extraction: Extraction) -> str:
    return json.dumps(to_json_dict(extraction), ensure_ascii=False)
