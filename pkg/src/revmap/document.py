"""Document model: tokens, revisions, and section detection.

A document revision is an ordered sequence of tokens; every position used
elsewhere in the package (delta positions, graph coordinates, layout x-spans)
counts tokens, not characters.  Tokenization is deterministic and whitespace
is never a token: reconstruction joins tokens with one canonical separator.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, overload

GRANULARITIES = ("word", "line")
SECTION_FORMATS = ("latex", "mediawiki", "none")


@lru_cache(maxsize=65536)
def token_hash(text: str) -> int:
    """Stable 64-bit content hash of a token's text.

    Stable across processes (unlike ``hash(str)``), so artifacts derived from
    it are reproducible run to run.
    """
    return int.from_bytes(hashlib.blake2b(text.encode("utf-8"), digest_size=8).digest(), "big")


@dataclass(frozen=True, eq=False)
class Token:
    """One token: literal text plus its content hash.

    Equality compares the hash first and falls back to the text, so a hash
    collision can never make two distinct tokens compare equal.
    """

    text: str
    hash: int

    def __post_init__(self) -> None:
        if not self.text:
            raise ValueError("token text must be non-empty")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Token):
            return NotImplemented
        return self.hash == other.hash and self.text == other.text

    def __hash__(self) -> int:
        return self.hash

    def __repr__(self) -> str:
        return f"Token({self.text!r})"


@lru_cache(maxsize=65536)
def _intern_token(text: str) -> Token:
    return Token(text, token_hash(text))


@dataclass(frozen=True)
class TokenSeq:
    """Immutable ordered sequence of tokens (positions are 0-based)."""

    tokens: tuple[Token, ...] = ()

    @classmethod
    def from_texts(cls, texts: Iterable[str]) -> "TokenSeq":
        return cls(tuple(_intern_token(t) for t in texts))

    def texts(self) -> tuple[str, ...]:
        return tuple(t.text for t in self.tokens)

    def text(self, separator: str = " ") -> str:
        """Reconstruct the document with one canonical separator per gap."""
        return separator.join(t.text for t in self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self) -> Iterator[Token]:
        return iter(self.tokens)

    @overload
    def __getitem__(self, index: int) -> Token: ...

    @overload
    def __getitem__(self, index: slice) -> "TokenSeq": ...

    def __getitem__(self, index):
        if isinstance(index, slice):
            return TokenSeq(self.tokens[index])
        return self.tokens[index]

    def __add__(self, other: "TokenSeq") -> "TokenSeq":
        return TokenSeq(self.tokens + other.tokens)

    def __bool__(self) -> bool:
        return bool(self.tokens)

    def __repr__(self) -> str:
        preview = " ".join(t.text for t in self.tokens[:8])
        if len(self.tokens) > 8:
            preview += " ..."
        return f"TokenSeq(<{len(self.tokens)} tokens: {preview}>)"


@dataclass(frozen=True)
class Revision:
    """One revision of a document: content plus authoring metadata.

    Indices within one history run consecutively from 1.
    """

    index: int
    author: str
    timestamp: str
    comment: str
    content: TokenSeq

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError(f"revision index must be >= 1, got {self.index}")


@dataclass(frozen=True)
class SectionSpan:
    """Half-open token range [start, end) of one section, in latest-revision
    coordinates.  An empty title marks an anonymous span."""

    title: str
    start: int
    end: int

    def __post_init__(self) -> None:
        if not (0 <= self.start < self.end):
            raise ValueError(f"invalid section span [{self.start}, {self.end})")


def tokenize(text: str, granularity: str = "word") -> TokenSeq:
    """Split text into tokens.

    ``word`` splits on maximal whitespace runs; ``line`` splits on newlines
    with terminators discarded.  Whitespace is never part of a token, and
    empty fragments (blank lines) are dropped so every token is non-empty.
    """
    if granularity == "word":
        parts = text.split()
    elif granularity == "line":
        parts = [line for line in text.splitlines() if line]
    else:
        raise ValueError(f"unknown granularity {granularity!r} (expected one of {GRANULARITIES})")
    return TokenSeq.from_texts(parts)


_LATEX_HEADING = re.compile(r"\\section\*?\{(?P<title>[^}]*)(?P<closed>\})?")
_MW_HEADING = re.compile(r"^(={2,})(?P<title>.*?)(={2,})\s*$")


def detect_sections(latest: TokenSeq, format: str = "none") -> list[SectionSpan]:
    """Find section heading positions in the latest revision.

    Returns spans that partition ``[0, len(latest))`` with no gaps or
    overlaps: each heading opens a span at its token, the span ends where the
    next begins, and any content before the first heading (or a document with
    no headings at all) is covered by an anonymous span.  Only one level of
    sectioning is detected; unparseable headings are ignored.
    """
    n = len(latest)
    if n == 0:
        return []
    if format == "none":
        return [SectionSpan("", 0, n)]
    if format == "latex":
        starts = _latex_heading_starts(latest)
    elif format == "mediawiki":
        starts = _mediawiki_heading_starts(latest)
    else:
        raise ValueError(f"unknown section format {format!r} (expected one of {SECTION_FORMATS})")

    spans: list[SectionSpan] = []
    if not starts:
        return [SectionSpan("", 0, n)]
    if starts[0][0] > 0:
        spans.append(SectionSpan("", 0, starts[0][0]))
    for k, (pos, title) in enumerate(starts):
        end = starts[k + 1][0] if k + 1 < len(starts) else n
        if pos < end:
            spans.append(SectionSpan(title, pos, end))
    return spans


def _latex_heading_starts(latest: TokenSeq) -> list[tuple[int, str]]:
    starts = []
    for i, tok in enumerate(latest):
        m = _LATEX_HEADING.match(tok.text)
        if m is None:
            continue
        title = m.group("title")
        if m.group("closed") is None:
            # word granularity splits multi-word titles; scan ahead to the
            # token carrying the closing brace
            for follow in latest.tokens[i + 1 : i + 16]:
                cut = follow.text.find("}")
                if cut >= 0:
                    title += " " + follow.text[:cut]
                    break
                title += " " + follow.text
            else:
                continue
        starts.append((i, title.strip()))
    return starts


def _mediawiki_heading_starts(latest: TokenSeq) -> list[tuple[int, str]]:
    starts = []
    i = 0
    n = len(latest)
    while i < n:
        text = latest[i].text
        m = _MW_HEADING.match(text)
        if m and m.group("title"):
            starts.append((i, m.group("title").strip()))
            i += 1
            continue
        if re.fullmatch(r"={2,}", text):
            # word granularity splits "== Title ==" across tokens
            for j in range(i + 1, min(i + 16, n)):
                if re.fullmatch(r"={2,}", latest[j].text):
                    title = " ".join(t.text for t in latest.tokens[i + 1 : j])
                    if title:
                        starts.append((i, title))
                        i = j
                    break
        i += 1
    return starts
