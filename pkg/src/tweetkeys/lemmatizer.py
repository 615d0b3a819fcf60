"""Rule-based English lemmatizer and contraction expander.

A lemma comes from, in order: the contraction table (for clitic tokens such
as "n't"), the irregular table, then the first applicable tag-conditioned
suffix rewrite.  A word matching nothing is its own lemma.  All rules are
data, loaded from a rules file (see data/lemma_rules.txt for the bundled set
and the format).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .model import PennTag, TaggedToken, Token

_APOSTROPHES = str.maketrans({"’": "'", "`": "'"})

# every clitic surface the tokenizer can emit must have an expansion
_REQUIRED_CLITICS = ("n't", "'ve", "'re", "'ll", "'m", "'d", "'s")


def _normalize(word: str) -> str:
    return word.translate(_APOSTROPHES).casefold()


@dataclass(frozen=True)
class SuffixRule:
    """Rewrite ``pattern`` at the end of a word to ``replacement``.

    Applies only to the tag codes in ``tags``.  Guards: at least one stem
    character must remain (whole-word rewrites with a nonempty replacement
    are allowed), and the result must be at least three characters long.
    """

    pattern: str
    replacement: str
    tags: frozenset[str]

    def apply(self, word: str) -> str | None:
        if not word.endswith(self.pattern):
            return None
        stem = len(word) - len(self.pattern)
        if stem < 1 and not (stem == 0 and self.replacement):
            return None
        candidate = word[:stem] + self.replacement
        if len(candidate) < 3:
            return None
        return candidate


@dataclass(frozen=True)
class Contraction:
    clitic: str
    expansion: str
    tag: PennTag


class LemmaRules:
    """Immutable rule set: irregular forms, suffix rewrites, contraction map."""

    def __init__(
        self,
        irregulars: dict[str, str],
        suffix_rules: list[SuffixRule],
        contractions: dict[str, Contraction],
    ):
        self.irregulars = dict(irregulars)
        self.suffix_rules = tuple(suffix_rules)
        self.contractions = dict(contractions)
        missing = [c for c in _REQUIRED_CLITICS if c not in self.contractions]
        if missing:
            raise ValueError(f"contraction table is missing clitics: {missing}")

    @classmethod
    def from_text(cls, text: str, origin: str = "<string>") -> "LemmaRules":
        irregulars: dict[str, str] = {}
        suffix_rules: list[SuffixRule] = []
        contractions: dict[str, Contraction] = {}
        section = None
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("[") and line.endswith("]"):
                section = line[1:-1].lower()
                if section not in ("irregular", "suffix", "contraction"):
                    raise ValueError(f"{origin}:{lineno}: unknown section {section!r}")
                continue
            cols = raw.rstrip("\n").split("\t")
            if section == "irregular":
                if len(cols) < 2:
                    raise ValueError(f"{origin}:{lineno}: expected from<TAB>to")
                irregulars[_normalize(cols[0])] = _normalize(cols[1])
            elif section == "suffix":
                if len(cols) < 3:
                    raise ValueError(f"{origin}:{lineno}: expected pattern<TAB>to<TAB>TAGS")
                replacement = "" if cols[1] == "-" else cols[1].lower()
                tags = frozenset(t.strip() for t in cols[2].split(",") if t.strip())
                suffix_rules.append(SuffixRule(cols[0].lower(), replacement, tags))
            elif section == "contraction":
                if len(cols) < 3:
                    raise ValueError(f"{origin}:{lineno}: expected clitic<TAB>to<TAB>TAG")
                clitic = _normalize(cols[0])
                contractions[clitic] = Contraction(
                    clitic, _normalize(cols[1]), PennTag.parse(cols[2].strip())
                )
            else:
                raise ValueError(f"{origin}:{lineno}: data before any [section] header")
        return cls(irregulars, suffix_rules, contractions)

    @classmethod
    def load(cls, path: str | Path) -> "LemmaRules":
        p = Path(path)
        return cls.from_text(p.read_text(encoding="utf-8"), origin=str(p))

    def lemma(self, word: str, tag: PennTag) -> str:
        """Base form of ``word`` under ``tag``; identity when nothing applies."""
        w = _normalize(word)
        if not w:
            raise ValueError("cannot lemmatize an empty word")
        contraction = self.contractions.get(w)
        if contraction is not None:
            expansion = contraction.expansion
            return self.irregulars.get(expansion, expansion)
        if w in self.irregulars:
            return self.irregulars[w]
        code = tag.code
        for rule in self.suffix_rules:
            if code in rule.tags:
                out = rule.apply(w)
                if out is not None:
                    return out
        return w

    def expand(
        self, token: TaggedToken, next_token: TaggedToken | None = None
    ) -> list[TaggedToken]:
        """Replace a clitic token by its expansion; non-clitics pass through.

        A possessive-tagged "'s" disappears (it carries no keyword content).
        An unsplit contraction such as "hasn't" comes back as two tokens, the
        base keeping the incoming tag.  "'d" uses one token of lookahead:
        "had" before a past participle, "would" otherwise.
        """
        norm = _normalize(token.norm)
        contraction = self.contractions.get(norm)
        if contraction is not None:
            if token.tag is PennTag.POS:
                return []
            expansion, tag = contraction.expansion, contraction.tag
            if norm == "'d" and next_token is not None and next_token.tag is PennTag.VBN:
                expansion, tag = "had", PennTag.VBD
            return [self._replacement(token, expansion, tag)]
        # unsplit contraction: peel one trailing clitic off the word
        for clitic in _REQUIRED_CLITICS:
            if norm.endswith(clitic) and len(norm) > len(clitic):
                base = norm[: -len(clitic)]
                expanded = self.expand(
                    TaggedToken(
                        token=Token(clitic, clitic, token.position),
                        tag=self.contractions[clitic].tag,
                        ner=token.ner,
                    ),
                    next_token,
                )
                return [self._replacement(token, base, token.tag)] + expanded
        return [token]

    def _replacement(self, source: TaggedToken, text: str, tag: PennTag) -> TaggedToken:
        return TaggedToken(
            token=Token(surface=text, norm=text, position=source.position),
            tag=tag,
            lemma=self.lemma(text, tag),
            ner=source.ner,
        )
