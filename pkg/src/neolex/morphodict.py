"""Morphological dictionary: lemmatization, dictionary membership, POS guessing.

Dictionary file format: UTF-8, tab-separated ``wordform<TAB>lemma<TAB>pos``,
one row per wordform, ``#`` starts a comment line. The POS column uses the
serialized enum strings ("N", "Nmod", "Nmod/N", "Adj", "V", "Adv/Pred",
"Interj", "Unknown"). Overrides file: ``lemma<TAB>pos``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .corpus import Token, normalize


class POS(Enum):
    N = "N"
    NMOD = "Nmod"
    NMOD_OR_N = "Nmod/N"
    ADJ = "Adj"
    V = "V"
    ADV_PRED = "Adv/Pred"
    INTERJ = "Interj"
    UNKNOWN = "Unknown"

    def __str__(self) -> str:  # serialized form
        return self.value

    @classmethod
    def parse(cls, s: str) -> "POS":
        for member in cls:
            if member.value == s:
                return member
        raise ValueError(f"unknown POS {s!r}")


# Deterministic analysis ordering: lemma lexicographic, then POS enum order.
_POS_ORDER = {pos: i for i, pos in enumerate(POS)}


@dataclass
class MorphoDict:
    """Immutable after load; the known-word boundary for OOV detection."""

    entries: dict[str, set[tuple[str, POS]]] = field(default_factory=dict)
    lemma_set: set[str] = field(default_factory=set)
    stem_hints: dict[str, str] = field(default_factory=dict)

    def __contains__(self, wordform: str) -> bool:
        return wordform in self.entries


@dataclass(frozen=True)
class LemmaAnalysis:
    lemma: str
    pos: POS
    in_dictionary: bool
    ambiguous: bool = False


class DictFormatError(ValueError):
    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def load_dictionary(path: str | Path) -> MorphoDict:
    """Load a 3-column wordform table; duplicate rows collapse."""
    d = MorphoDict()
    with Path(path).open(encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise DictFormatError(f"expected 3 tab-separated columns, got {len(parts)}", line_no)
            wordform, lemma, pos_s = (p.strip() for p in parts)
            if not wordform or not lemma:
                raise DictFormatError("empty wordform or lemma", line_no)
            try:
                pos = POS.parse(pos_s)
            except ValueError as exc:
                raise DictFormatError(str(exc), line_no) from exc
            wordform = normalize(wordform)
            lemma = normalize(lemma)
            d.entries.setdefault(wordform, set()).add((lemma, pos))
            d.lemma_set.add(lemma)
    return d


def load_pos_overrides(path: str | Path) -> dict[str, POS]:
    """Load a 2-column ``lemma<TAB>pos`` map."""
    overrides: dict[str, POS] = {}
    with Path(path).open(encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise DictFormatError(f"expected 2 tab-separated columns, got {len(parts)}", line_no)
            overrides[normalize(parts[0].strip())] = POS.parse(parts[1].strip())
    return overrides


def lemmatize(token: Token | str, dictionary: MorphoDict) -> LemmaAnalysis:
    """Look up a token's analyses; OOV falls back to identity lemmatization.

    Multiple dictionary analyses are resolved to the deterministically first
    one (lemma lexicographic, then POS enum order) with ``ambiguous=True``.
    """
    word = token.normalized if isinstance(token, Token) else normalize(token)
    if not word:
        raise ValueError("cannot lemmatize an empty token")
    analyses = dictionary.entries.get(word)
    if not analyses:
        return LemmaAnalysis(lemma=word, pos=POS.UNKNOWN, in_dictionary=False)
    lemma, pos = min(analyses, key=lambda lp: (lp[0], _POS_ORDER[lp[1]]))
    return LemmaAnalysis(lemma=lemma, pos=pos, in_dictionary=True, ambiguous=len(analyses) > 1)


_VERB_ENDINGS = ("ть", "ти", "чь")
_ADJ_ENDINGS = ("ый", "ий", "ой")


def guess_pos(lemma: str, overrides: dict[str, POS] | None = None) -> POS:
    """Suffix-rule POS guess for OOV lemmas; a curated override map wins.

    Nmod is never guessed here: modifier status is a usage property decided
    from corpus behaviour (derivation.modifier_ratio) or by the reviewer.
    """
    lemma = normalize(lemma)
    if overrides and lemma in overrides:
        return overrides[lemma]
    stem = lemma[:-2] if lemma.endswith("ся") else lemma
    if any(stem.endswith(e) for e in _VERB_ENDINGS):
        return POS.V
    if len(lemma) >= 5 and any(lemma.endswith(e) for e in _ADJ_ENDINGS):
        return POS.ADJ
    return POS.N
