"""Access to the bundled resource files and ready-made pipeline configs."""

from __future__ import annotations

import functools
from importlib import resources

from .corpora import CorpusStore, parse_corpus
from .lemmatizer import LemmaRules
from .model import CorpusKind, Mode
from .ner import Gazetteer
from .pipeline import PipelineConfig
from .tagger import TagLexicon

DEMO_DATASET_ID = "demo14"


def data_text(name: str) -> str:
    return (resources.files("tweetkeys") / "data" / name).read_text(encoding="utf-8")


@functools.lru_cache(maxsize=None)
def default_lexicon() -> TagLexicon:
    return TagLexicon.from_text(data_text("lexicon.txt"), origin="data/lexicon.txt")


@functools.lru_cache(maxsize=None)
def default_rules() -> LemmaRules:
    return LemmaRules.from_text(data_text("lemma_rules.txt"), origin="data/lemma_rules.txt")


@functools.lru_cache(maxsize=None)
def default_gazetteer() -> Gazetteer:
    return Gazetteer.from_text(data_text("gazetteer.txt"), origin="data/gazetteer.txt")


@functools.lru_cache(maxsize=None)
def default_store() -> CorpusStore:
    dsk = parse_corpus(data_text("dsk.txt"), CorpusKind.DSK, name="dsk-seed")
    reject = parse_corpus(data_text("reject.txt"), CorpusKind.REJECT, name="reject-seed")
    return CorpusStore(dsk=dsk, reject=reject)


def default_config(mode: Mode = Mode.STAGE2, keep_trace: bool = False) -> PipelineConfig:
    return PipelineConfig(
        mode=mode,
        store=default_store(),
        lexicon=default_lexicon(),
        rules=default_rules(),
        gazetteer=default_gazetteer(),
        keep_trace=keep_trace,
    )
