"""Twitter-aware tokenizer.

Keeps @mentions, #hashtags and URLs whole, emits punctuation marks as
standalone tokens, and splits trailing contraction clitics ("n't", "'ve",
"'s", "'re", "'ll", "'d", "'m") into their own tokens the way Penn Treebank
tokenization does.  Concatenating the produced surfaces recovers every
non-whitespace character of the input, in order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .model import Token

# Longest match first; the final \S alternative guarantees every
# non-whitespace character lands in exactly one token.
_TOKEN_RE = re.compile(
    r"""
      https?://\S+ | www\.\S+          # URLs
    | @\w+                             # usernames
    | \#\w+                            # hashtags
    | \d{1,2}:\d{2}(?:[ap]m)?          # clock forms, kept whole for NER
    | \d+(?:[.,]\d+)+                  # decimal/grouped numbers
    | \w+(?:['’]\w+)*             # words, possibly with inner apostrophes
    | ['’]\w+                     # bare clitics such as 've
    | \S                               # any other char: standalone punctuation
    """,
    re.VERBOSE | re.IGNORECASE,
)

# Checked against the case-folded tail of a word chunk; "n't" must come
# before the bare-apostrophe forms so "hasn't" peels as has + n't.
_CLITICS = ("n't", "'ve", "'re", "'ll", "'m", "'d", "'s")

_URL_TRAILING = ".,!?;:'\")]}"


def looks_like_url(text: str) -> bool:
    low = text.lower()
    return low.startswith(("http://", "https://", "www."))


@dataclass(frozen=True)
class TokenizerConfig:
    split_contractions: bool = True
    lowercase_norm: bool = True


def _fold_apostrophes(text: str) -> str:
    return text.replace("’", "'")


def _split_clitics(chunk: str) -> list[str]:
    """Peel known clitics off the end of a word chunk, repeatedly."""
    pieces: list[str] = []
    rest = chunk
    while True:
        tail = _fold_apostrophes(rest.lower())
        for clitic in _CLITICS:
            if tail.endswith(clitic) and len(rest) > len(clitic):
                pieces.append(rest[-len(clitic):])
                rest = rest[: -len(clitic)]
                break
        else:
            break
    pieces.append(rest)
    pieces.reverse()
    return pieces


def tokenize(tweet: str, config: TokenizerConfig | None = None) -> list[Token]:
    """Split a raw tweet into tokens; degenerate input yields an empty list."""
    cfg = config or TokenizerConfig()
    surfaces: list[str] = []
    for match in _TOKEN_RE.finditer(tweet):
        chunk = match.group()
        if looks_like_url(chunk):
            trimmed = chunk.rstrip(_URL_TRAILING)
            if trimmed:
                surfaces.append(trimmed)
                # re-emit what rstrip removed so no character is lost
                surfaces.extend(chunk[len(trimmed):])
            else:
                surfaces.extend(chunk)
        elif cfg.split_contractions and (chunk[0].isalnum() or chunk[0] == "_"):
            surfaces.extend(_split_clitics(chunk))
        else:
            surfaces.append(chunk)
    return [
        Token(surface=s, norm=s.casefold() if cfg.lowercase_norm else s, position=i)
        for i, s in enumerate(surfaces)
    ]
