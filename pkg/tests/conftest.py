"""Shared fixtures and the seeded tweet generator used by property tests."""

from __future__ import annotations

import random

import pytest

from tweetkeys import Mode, default_config
from tweetkeys.defaults import (
    default_gazetteer,
    default_lexicon,
    default_rules,
    default_store,
)

WORKED_TWEET = (
    "@dialoglk I made my payment just after my line got barred in the morning! "
    "And still the line hasn't got connected, Whats with the delay?"
)
WORKED_STAGE2 = ["made", "payment", "line", "got", "barred", "not", "connected", "delay"]
WORKED_STAGE1 = [
    "made", "payment", "line", "got", "barred", "morning", "line", "got", "connected", "delay",
]
IDENTICAL_TWEET = "@dialoglk Where i can buy a touch travel pass?"
IDENTICAL_KEYWORDS = ["buy", "touch", "travel", "pass"]


@pytest.fixture(scope="session")
def lexicon():
    return default_lexicon()


@pytest.fixture(scope="session")
def rules():
    return default_rules()


@pytest.fixture(scope="session")
def gazetteer():
    return default_gazetteer()


@pytest.fixture(scope="session")
def store():
    return default_store()


@pytest.fixture(scope="session")
def stage2_config():
    return default_config(Mode.STAGE2)


@pytest.fixture(scope="session")
def stage1_config():
    return default_config(Mode.STAGE1)


# vocabulary pools for generated tweets; deliberately heavy on the cases the
# pipeline invariants are about (negation, time words, reject words, clitics)
_NOUNS = [
    "payment", "line", "signal", "network", "account", "balance", "package",
    "router", "delay", "phone", "bill", "card", "message", "offer", "plan",
    "problem", "sim", "team", "office", "outage", "connection", "speed",
]
_VERBS = [
    "made", "got", "barred", "connected", "failed", "works", "working",
    "checked", "paid", "sent", "received", "activated", "stopped", "started",
    "waiting", "running", "fixed", "blocked", "expired", "changed", "buy",
]
_AUXILIARIES = ["is", "was", "has", "have", "had", "been", "are", "does", "did"]
_ADVERBS = ["just", "still", "again", "always", "really", "never", "not", "very", "soon"]
_REJECTS = ["hello", "hi", "please", "thanks", "dear", "ok", "sorry", "guys", "lol"]
_TIME_WORDS = [
    "morning", "evening", "tonight", "monday", "friday", "yesterday",
    "tomorrow", "midnight", "weekend", "afternoon",
]
_MENTIONS = ["@dialoglk", "@support", "@telco"]
_HASHTAGS = ["#megarun", "#offer", "#help", "#roaming"]
_CONTRACTIONS = [
    "hasn't", "isn't", "don't", "can't", "won't", "didn't", "couldn't",
    "i've", "we're", "they'll", "i'm", "she'd",
]
_FILLERS = [
    "the", "a", "my", "your", "this", "in", "on", "at", "for", "with",
    "and", "but", "so", "i", "you", "we", "it",
]
_PUNCT = ["!", "?", ".", ","]
_URLS = ["http://dlg.lk/offer", "https://example.com/x"]

_POOLS = [
    (_NOUNS, 22),
    (_VERBS, 18),
    (_AUXILIARIES, 8),
    (_ADVERBS, 8),
    (_REJECTS, 6),
    (_TIME_WORDS, 7),
    (_MENTIONS, 4),
    (_HASHTAGS, 4),
    (_CONTRACTIONS, 8),
    (_FILLERS, 18),
    (_PUNCT, 5),
    (_URLS, 2),
]


def generate_tweet(rng: random.Random) -> str:
    words = []
    for _ in range(rng.randint(1, 14)):
        pool = rng.choices([p for p, _ in _POOLS], weights=[w for _, w in _POOLS])[0]
        words.append(rng.choice(pool))
    return " ".join(words)


def generate_tweets(seed: int, count: int) -> list[str]:
    rng = random.Random(seed)
    return [generate_tweet(rng) for _ in range(count)]
