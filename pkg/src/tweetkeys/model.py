"""Shared domain types for the keyword-extraction pipeline and its evaluators.

Everything in this module is an immutable value object; instances are safe to
share and send across threads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class PennTag(enum.Enum):
    """Penn Treebank POS tags plus Twitter extensions (USR, HT, URL, RT).

    SYM doubles as the catch-all for punctuation and for codes imported from
    external taggers that this enumeration does not know.
    """

    CC = "CC"
    CD = "CD"
    DT = "DT"
    EX = "EX"
    FW = "FW"
    IN = "IN"
    JJ = "JJ"
    JJR = "JJR"
    JJS = "JJS"
    LS = "LS"
    MD = "MD"
    NN = "NN"
    NNS = "NNS"
    NNP = "NNP"
    NNPS = "NNPS"
    PDT = "PDT"
    POS = "POS"
    PRP = "PRP"
    PRP_DOLLAR = "PRP$"
    RB = "RB"
    RBR = "RBR"
    RBS = "RBS"
    RP = "RP"
    TO = "TO"
    UH = "UH"
    VB = "VB"
    VBD = "VBD"
    VBG = "VBG"
    VBN = "VBN"
    VBP = "VBP"
    VBZ = "VBZ"
    WDT = "WDT"
    WP = "WP"
    WP_DOLLAR = "WP$"
    WRB = "WRB"
    USR = "USR"
    HT = "HT"
    URL = "URL"
    RT = "RT"
    SYM = "SYM"

    def __str__(self) -> str:
        return self.value

    @property
    def code(self) -> str:
        """The printable tag code, e.g. ``"PRP$"``."""
        return self.value

    @classmethod
    def parse(cls, code: str) -> "PennTag":
        """Parse a tag code; raises ValueError for codes outside the enumeration."""
        try:
            return cls(code)
        except ValueError:
            raise ValueError(f"unknown POS tag code: {code!r}") from None


class TagCategory(enum.Enum):
    NOUN = "noun"
    VERB = "verb"
    ADVERB = "adverb"
    OTHER = "other"


def tag_category(tag: PennTag) -> TagCategory:
    """Coarse word class of a tag, decided purely by its code prefix.

    Total over the enumeration: every tag maps to exactly one category.
    """
    code = tag.code
    if code.startswith("NN"):
        return TagCategory.NOUN
    if code.startswith("VB"):
        return TagCategory.VERB
    if code.startswith("RB"):
        return TagCategory.ADVERB
    return TagCategory.OTHER


class NerLabel(enum.Enum):
    """Seven entity classes plus NONE for tokens outside all of them."""

    LOCATION = "LOCATION"
    PERSON = "PERSON"
    ORGANIZATION = "ORGANIZATION"
    MONEY = "MONEY"
    PERCENT = "PERCENT"
    DATE = "DATE"
    TIME = "TIME"
    NONE = "NONE"


class Mode(enum.Enum):
    """Pipeline mode: the baseline parser chain or the enhanced chain."""

    STAGE1 = "stage1"
    STAGE2 = "stage2"


class KeywordSource(enum.Enum):
    """Which pipeline rule finalized a keyword."""

    SELECTED = "selected"
    NEGATION_REINSERTED = "negation_reinserted"
    DSK_INCLUDED = "dsk_included"


class CorpusKind(enum.Enum):
    DSK = "dsk"
    REJECT = "reject"
    AUXILIARY = "auxiliary"


@dataclass(frozen=True)
class Token:
    """One surface span of a tweet; ``norm`` is the case-folded lookup form."""

    surface: str
    norm: str
    position: int


@dataclass(frozen=True)
class TaggedToken:
    """A token with its POS tag and, once computed, lemma and entity label."""

    token: Token
    tag: PennTag
    lemma: str | None = None
    ner: NerLabel = NerLabel.NONE

    @property
    def surface(self) -> str:
        return self.token.surface

    @property
    def norm(self) -> str:
        return self.token.norm

    @property
    def position(self) -> int:
        return self.token.position

    @property
    def category(self) -> TagCategory:
        return tag_category(self.tag)


@dataclass(frozen=True)
class Keyword:
    """A finalized keyword; (text, tag) is the deduplication identity."""

    text: str
    tag: PennTag
    source: KeywordSource = KeywordSource.SELECTED

    @property
    def identity(self) -> tuple[str, str]:
        return (self.text, self.tag.code)


@dataclass(frozen=True)
class KeywordList:
    """Ordered extraction result for one tweet."""

    tweet: str
    keywords: tuple[Keyword, ...]
    mode: Mode

    def texts(self) -> list[str]:
        return [k.text for k in self.keywords]

    def __iter__(self):
        return iter(self.keywords)

    def __len__(self) -> int:
        return len(self.keywords)


@dataclass(frozen=True)
class Corpus:
    """A named lowercase term list (single tokens or space-joined phrases)."""

    name: str
    kind: CorpusKind
    terms: frozenset[str]

    def __contains__(self, term: str) -> bool:
        return term in self.terms

    def __len__(self) -> int:
        return len(self.terms)
