"""Corpus model: JSONL ingestion, language filtering, tokenization, corpus statistics.

A corpus file is UTF-8 JSON Lines, one document per line:
``{"id": "...", "kind": "post"|"comment", "created_at": "...", "text": "..."}``.
Unknown fields are ignored.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from datetime import datetime
from enum import Enum
from pathlib import Path
from typing import Iterable, Iterator

log = logging.getLogger(__name__)

CYRILLIC_RATIO_THRESHOLD = 0.75
MIN_LETTERS = 3
UKRAINIAN_MARKERS = frozenset("іїєґ")

_CYR_LOWER = frozenset("абвгдежзийклмнопрстуфхцчшщъыьэюяё")
_CYR_EXTRA = frozenset("іїєґ")  # Ukrainian letters count as Cyrillic script


class DocKind(str, Enum):
    POST = "post"
    COMMENT = "comment"


class RejectReason(str, Enum):
    TOO_SHORT = "too_short"
    LOW_CYRILLIC = "low_cyrillic"
    UKRAINIAN_MARKERS = "ukrainian_markers"


@dataclass(frozen=True)
class CorpusDocument:
    """One post or comment."""

    id: str
    kind: DocKind
    text: str
    created_at: datetime | None = None
    user: str | None = None


@dataclass(frozen=True)
class Token:
    surface: str
    normalized: str
    offset: int


@dataclass(frozen=True)
class LanguageVerdict:
    is_target: bool
    cyrillic_ratio: float
    reject_reason: RejectReason | None = None


@dataclass
class CorpusStats:
    """Corpus-level counts; means are None when the denominator is zero."""

    n_posts: int = 0
    n_comments: int = 0
    n_tokens_posts: int = 0
    n_tokens_comments: int = 0
    n_users: int | None = None

    @property
    def n_texts(self) -> int:
        return self.n_posts + self.n_comments

    @property
    def n_tokens_total(self) -> int:
        return self.n_tokens_posts + self.n_tokens_comments

    @property
    def mean_post_len(self) -> float | None:
        return self.n_tokens_posts / self.n_posts if self.n_posts else None

    @property
    def mean_comment_len(self) -> float | None:
        return self.n_tokens_comments / self.n_comments if self.n_comments else None

    def merge(self, other: "CorpusStats") -> "CorpusStats":
        """Associative shard merge (user counts only combine when both tracked)."""
        users = None
        if self.n_users is not None and other.n_users is not None:
            users = self.n_users + other.n_users
        return CorpusStats(
            n_posts=self.n_posts + other.n_posts,
            n_comments=self.n_comments + other.n_comments,
            n_tokens_posts=self.n_tokens_posts + other.n_tokens_posts,
            n_tokens_comments=self.n_tokens_comments + other.n_tokens_comments,
            n_users=users,
        )

    def as_dict(self) -> dict:
        return {
            "n_posts": self.n_posts,
            "n_comments": self.n_comments,
            "n_texts": self.n_texts,
            "n_tokens_posts": self.n_tokens_posts,
            "n_tokens_comments": self.n_tokens_comments,
            "n_tokens_total": self.n_tokens_total,
            "mean_post_len": self.mean_post_len,
            "mean_comment_len": self.mean_comment_len,
        }


class CorpusFormatError(ValueError):
    """Raised for malformed corpus lines in abort mode."""

    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass
class IngestReport:
    """Mutable counter the caller can inspect after the stream is consumed."""

    skipped: int = 0


def _parse_doc(obj: object, line_no: int) -> CorpusDocument:
    if not isinstance(obj, dict):
        raise CorpusFormatError("document is not a JSON object", line_no)
    doc_id = obj.get("id")
    kind = obj.get("kind")
    text = obj.get("text")
    if not isinstance(doc_id, str) or not doc_id:
        raise CorpusFormatError("missing or empty 'id'", line_no)
    if kind not in (DocKind.POST.value, DocKind.COMMENT.value):
        raise CorpusFormatError(f"bad 'kind': {kind!r}", line_no)
    if not isinstance(text, str):
        raise CorpusFormatError("missing 'text'", line_no)
    created = None
    raw_ts = obj.get("created_at")
    if isinstance(raw_ts, str) and raw_ts:
        try:
            created = datetime.fromisoformat(raw_ts.replace("Z", "+00:00"))
        except ValueError:
            raise CorpusFormatError(f"bad 'created_at': {raw_ts!r}", line_no)
    user = obj.get("user")
    return CorpusDocument(
        id=doc_id,
        kind=DocKind(kind),
        text=text,
        created_at=created,
        user=user if isinstance(user, str) and user else None,
    )


def ingest_corpus(
    path: str | Path,
    on_error: str = "skip",
    report: IngestReport | None = None,
) -> Iterator[CorpusDocument]:
    """Stream documents from a JSONL corpus file.

    ``on_error="skip"`` drops malformed lines (counted in ``report`` and logged);
    ``on_error="abort"`` raises :class:`CorpusFormatError` with the line number.
    """
    if on_error not in ("skip", "abort"):
        raise ValueError(f"on_error must be 'skip' or 'abort', got {on_error!r}")
    path = Path(path)
    skipped = 0
    with path.open(encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
                doc = _parse_doc(obj, line_no)
            except (json.JSONDecodeError, CorpusFormatError) as exc:
                if on_error == "abort":
                    if isinstance(exc, CorpusFormatError):
                        raise
                    raise CorpusFormatError(str(exc), line_no) from exc
                skipped += 1
                if report is not None:
                    report.skipped = skipped
                continue
            yield doc
    if skipped:
        log.warning("ingest %s: skipped %d malformed line(s)", path, skipped)


def _is_cyrillic(ch: str) -> bool:
    return ch in _CYR_LOWER or ch in _CYR_EXTRA


def detect_language(text: str) -> LanguageVerdict:
    """Cyrillic-ratio heuristic standing in for an external language identifier.

    A text is on-target iff it has at least 3 letters, at least 75% of them
    Cyrillic, and no Ukrainian-only letters. The first failing check (in that
    order) becomes the reject reason.
    """
    letters = [ch for ch in text.lower() if ch.isalpha()]
    if not letters:
        return LanguageVerdict(False, 0.0, RejectReason.TOO_SHORT)
    cyr = sum(1 for ch in letters if _is_cyrillic(ch))
    ratio = cyr / len(letters)
    if len(letters) < MIN_LETTERS:
        return LanguageVerdict(False, ratio, RejectReason.TOO_SHORT)
    if ratio < CYRILLIC_RATIO_THRESHOLD:
        return LanguageVerdict(False, ratio, RejectReason.LOW_CYRILLIC)
    if any(ch in UKRAINIAN_MARKERS for ch in text.lower()):
        return LanguageVerdict(False, ratio, RejectReason.UKRAINIAN_MARKERS)
    return LanguageVerdict(True, ratio)


def normalize(word: str) -> str:
    """Lowercase and map ё to е — the single normalization used pipeline-wide."""
    return word.lower().replace("ё", "е")


def tokenize(text: str) -> list[Token]:
    """Split out maximal Cyrillic-letter runs, allowing single internal hyphens.

    Everything else separates tokens; a hyphen is kept only between two
    Cyrillic letters, so leading/trailing hyphens never attach.
    """
    tokens: list[Token] = []
    lower = text.lower()
    n = len(text)
    i = 0
    while i < n:
        if not _is_cyrillic(lower[i]):
            i += 1
            continue
        start = i
        while i < n:
            if _is_cyrillic(lower[i]):
                i += 1
            elif (
                text[i] == "-"
                and i + 1 < n
                and _is_cyrillic(lower[i + 1])
                and text[i - 1] != "-"
            ):
                i += 1
            else:
                break
        surface = text[start:i]
        tokens.append(Token(surface=surface, normalized=normalize(surface), offset=start))
    return tokens


def corpus_stats(docs: Iterable[CorpusDocument], lang_filter: bool = True) -> CorpusStats:
    """Count documents and tokens, optionally dropping off-language documents."""
    stats = CorpusStats()
    users: set[str] = set()
    saw_user = False
    for doc in docs:
        if lang_filter and not detect_language(doc.text).is_target:
            continue
        n_tok = len(tokenize(doc.text))
        if doc.kind is DocKind.POST:
            stats.n_posts += 1
            stats.n_tokens_posts += n_tok
        else:
            stats.n_comments += 1
            stats.n_tokens_comments += n_tok
        if doc.user:
            saw_user = True
            users.add(doc.user)
    if saw_user:
        stats.n_users = len(users)
    return stats
