"""Load, validate, and query the domain corpora.

Two corpora drive the pipeline: the DSK accept-list (domain terms forced into
the keyword set when the tagger misses them) and the reject-list (greetings,
interjections and other meaning-free words).  Auxiliary verbs are a closed
built-in list rather than corpus content, because rejecting "has" is language
knowledge, not domain knowledge.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path

from .model import Corpus, CorpusKind

log = logging.getLogger(__name__)

AUXILIARY_LEMMAS = frozenset(
    "be have do can could will would shall should may might must".split()
)

AUXILIARIES = Corpus(
    name="auxiliaries", kind=CorpusKind.AUXILIARY, terms=AUXILIARY_LEMMAS
)


class CorpusError(ValueError):
    """Corpus unusable: unreadable file, zero terms, or store inconsistency."""


def load_corpus(path: str | Path, kind: CorpusKind, name: str | None = None) -> Corpus:
    """Load one lowercase term per line; ``#`` comments and blank lines ignored.

    Duplicates collapse with a warning; a corpus with zero terms is an error
    (it signals a misconfigured deployment, not a valid empty filter).
    """
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise CorpusError(f"cannot read corpus {p}: {e}") from e
    return parse_corpus(text, kind, name=name or p.stem, origin=str(p))


def parse_corpus(
    text: str, kind: CorpusKind, name: str = "<string>", origin: str = "<string>"
) -> Corpus:
    terms: set[str] = set()
    duplicates = 0
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        term = " ".join(line.casefold().split())
        if term in terms:
            duplicates += 1
        terms.add(term)
    if duplicates:
        log.warning("%s: %d duplicate term(s) collapsed", origin, duplicates)
    if not terms:
        raise CorpusError(f"{origin}: corpus has zero terms")
    log.info("%s: loaded %d %s term(s)", origin, len(terms), kind.value)
    return Corpus(name=name, kind=kind, terms=frozenset(terms))


def contains(corpus: Corpus, word: str) -> bool:
    """Exact-match membership; callers pass already-lowercased forms."""
    return word in corpus.terms


@dataclass(frozen=True)
class CorpusStore:
    """The resolved corpora a pipeline run needs."""

    dsk: Corpus
    reject: Corpus
    auxiliaries: Corpus = field(default=AUXILIARIES)

    def __post_init__(self):
        if self.dsk.kind is not CorpusKind.DSK:
            raise CorpusError(f"dsk corpus has kind {self.dsk.kind.value}")
        if self.reject.kind is not CorpusKind.REJECT:
            raise CorpusError(f"reject corpus has kind {self.reject.kind.value}")
        overlap = self.dsk.terms & self.reject.terms
        if overlap:
            raise CorpusError(
                f"dsk and reject corpora overlap: {sorted(overlap)[:5]}"
            )
