"""tweetkeys: two-stage rule-based essential-keyword extraction for tweets.

The pipeline selects noun/verb tokens, strips corpus-listed noise and
auxiliary verbs, removes entity-labeled time indicators, expands
contractions so negation survives, force-includes domain keywords, and
deduplicates while preserving tweet order.  The evaluation side scores
machine output against human keyword sets (precision/recall/F1) and runs
blind pick-the-machine judgment sessions over an HTTP service.
"""

from .corpora import AUXILIARIES, CorpusError, CorpusStore, contains, load_corpus
from .defaults import default_config, default_store
from .evaluation import (
    EvalScores,
    SessionPair,
    TuringSession,
    TuringTally,
    average_scores,
    new_session,
    pass_verdict,
    score,
    tally,
)
from .lemmatizer import LemmaRules
from .model import (
    Corpus,
    CorpusKind,
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
from .pipeline import Extraction, PipelineConfig, extract, to_json, to_json_dict
from .tagger import TagLexicon, TaggedTweet, import_tagged, tag, token_accuracy
from .tokenizer import TokenizerConfig, tokenize

__version__ = "0.1.0"

__all__ = [
    "AUXILIARIES",
    "Corpus",
    "CorpusError",
    "CorpusKind",
    "CorpusStore",
    "EvalScores",
    "Extraction",
    "Gazetteer",
    "Keyword",
    "KeywordList",
    "KeywordSource",
    "LemmaRules",
    "Mode",
    "NerLabel",
    "PennTag",
    "PipelineConfig",
    "SessionPair",
    "TagCategory",
    "TagLexicon",
    "TaggedToken",
    "TaggedTweet",
    "Token",
    "TokenizerConfig",
    "TuringSession",
    "TuringTally",
    "average_scores",
    "classify",
    "contains",
    "default_config",
    "default_store",
    "extract",
    "import_tagged",
    "load_corpus",
    "new_session",
    "pass_verdict",
    "score",
    "tag",
    "tag_category",
    "tally",
    "to_json",
    "to_json_dict",
    "token_accuracy",
    "tokenize",
]
