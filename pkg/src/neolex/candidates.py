"""Candidate extraction: automated noise filters and reference-lexicon exclusion.

The filters front-load the deterministic part of the expert clean-up: obvious
lemmatizer fragments, abbreviations, non-Cyrillic strings, Ukrainian words and
stoplisted proper nouns get flagged before any human looks at the queue.
Reference wordlists stand in for external dictionary / pre-2000 corpus
lookups. Auto-rejection is reversible in review.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .corpus import normalize
from .derivation import DerivType, LoanType
from .freqcount import FreqRecord
from .lists import load_wordlist
from .morphodict import POS

_CYR_OK = frozenset("абвгдежзийклмнопрстуфхцчшщъыьэюяёіїєґ-")
UKRAINIAN_LETTERS = frozenset("іїєґ")
MIN_LEMMA_LEN = 3


class NoiseFlag(str, Enum):
    TOO_SHORT = "too_short"
    NON_CYRILLIC = "non_cyrillic"
    ABBREVIATION = "abbreviation"
    UKRAINIAN = "ukrainian"
    FRAGMENT_SUFFIX = "fragment_suffix"
    PROPER_NOUN_HINT = "proper_noun_hint"


class Status(str, Enum):
    PENDING = "pending"
    ACCEPTED = "accepted"
    REJECTED = "rejected"


class RejectReason(str, Enum):
    PROPER_NOUN = "proper_noun"
    NON_RUSSIAN = "non_russian"
    LEMMATIZER_ARTIFACT = "lemmatizer_artifact"
    IN_REFERENCE = "in_reference"
    OTHER = "other"


@dataclass
class NoiseLists:
    abbreviations: set[str] = field(default_factory=set)
    fragments: set[str] = field(default_factory=set)
    proper_nouns: set[str] = field(default_factory=set)

    @classmethod
    def load(cls, directory: str | Path) -> "NoiseLists":
        directory = Path(directory)
        return cls(
            abbreviations=load_wordlist(directory / "abbreviations.txt"),
            fragments=load_wordlist(directory / "fragments.txt"),
            proper_nouns=load_wordlist(directory / "proper_nouns.txt"),
        )


@dataclass
class ClassLabels:
    """The five classification axes; topic only ever comes from the reviewer."""

    pos: POS | None = None
    topic: str | None = None
    loan_type: LoanType | None = None
    deriv_type: DerivType | None = None
    model: str | None = None

    def complete(self) -> bool:
        if self.pos is None or self.topic is None or self.loan_type is None:
            return False
        derived = self.deriv_type is not None and self.deriv_type is not DerivType.UNDERIVED
        return (self.model is not None) == derived

    def as_dict(self) -> dict:
        return {
            "pos": str(self.pos) if self.pos else None,
            "topic": self.topic,
            "loan_type": str(self.loan_type) if self.loan_type else None,
            "deriv_type": str(self.deriv_type) if self.deriv_type else None,
            "model": self.model,
        }

    @classmethod
    def from_dict(cls, d: dict | None) -> "ClassLabels | None":
        if not d:
            return None
        deriv = d.get("deriv_type")
        return cls(
            pos=POS.parse(d["pos"]) if d.get("pos") else None,
            topic=d.get("topic") or None,
            loan_type=LoanType.parse(d["loan_type"]) if d.get("loan_type") else None,
            deriv_type=DerivType.parse(deriv) if deriv else None,
            model=d.get("model") or None,
        )


@dataclass
class Candidate:
    lemma: str
    pos: POS
    freq: int
    contexts: list[str] = field(default_factory=list)
    auto_flags: set[NoiseFlag] = field(default_factory=set)
    in_reference: bool = False
    status: Status = Status.PENDING
    reject_reason: RejectReason | None = None
    labels: ClassLabels | None = None
    suggested: ClassLabels | None = None
    needs_review: bool = False

    def as_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "pos": str(self.pos),
            "freq": self.freq,
            "contexts": list(self.contexts),
            "auto_flags": sorted(f.value for f in self.auto_flags),
            "in_reference": self.in_reference,
            "status": self.status.value,
            "reject_reason": self.reject_reason.value if self.reject_reason else None,
            "labels": self.labels.as_dict() if self.labels else None,
            "suggested": self.suggested.as_dict() if self.suggested else None,
            "needs_review": self.needs_review,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Candidate":
        return cls(
            lemma=d["lemma"],
            pos=POS.parse(d["pos"]),
            freq=int(d["freq"]),
            contexts=list(d.get("contexts") or []),
            auto_flags={NoiseFlag(f) for f in d.get("auto_flags") or []},
            in_reference=bool(d.get("in_reference")),
            status=Status(d.get("status", "pending")),
            reject_reason=RejectReason(d["reject_reason"]) if d.get("reject_reason") else None,
            labels=ClassLabels.from_dict(d.get("labels")),
            suggested=ClassLabels.from_dict(d.get("suggested")),
            needs_review=bool(d.get("needs_review")),
        )


def noise_filter(lemma: str, lists: NoiseLists) -> set[NoiseFlag]:
    """All applicable noise flags for a lemma (flags may co-occur)."""
    lemma = normalize(lemma)
    flags: set[NoiseFlag] = set()
    if len(lemma) < MIN_LEMMA_LEN:
        flags.add(NoiseFlag.TOO_SHORT)
    if any(ch not in _CYR_OK for ch in lemma):
        flags.add(NoiseFlag.NON_CYRILLIC)
    if any(ch in UKRAINIAN_LETTERS for ch in lemma):
        flags.add(NoiseFlag.UKRAINIAN)
    if lemma in lists.abbreviations:
        flags.add(NoiseFlag.ABBREVIATION)
    if lemma in lists.fragments:
        flags.add(NoiseFlag.FRAGMENT_SUFFIX)
    if lemma in lists.proper_nouns:
        flags.add(NoiseFlag.PROPER_NOUN_HINT)
    return flags


def reference_check(lemma: str, refs: list[set[str]]) -> bool:
    """True iff the lemma is recorded by any reference wordlist."""
    lemma = normalize(lemma)
    return any(lemma in ref for ref in refs)


def _auto_reject_reason(flags: set[NoiseFlag], in_reference: bool) -> RejectReason:
    if in_reference:
        return RejectReason.IN_REFERENCE
    if NoiseFlag.PROPER_NOUN_HINT in flags:
        return RejectReason.PROPER_NOUN
    if NoiseFlag.ABBREVIATION in flags or NoiseFlag.FRAGMENT_SUFFIX in flags:
        return RejectReason.LEMMATIZER_ARTIFACT
    if NoiseFlag.UKRAINIAN in flags or NoiseFlag.NON_CYRILLIC in flags:
        return RejectReason.NON_RUSSIAN
    return RejectReason.LEMMATIZER_ARTIFACT


def extract_candidates(
    records: list[FreqRecord],
    refs: list[set[str]],
    noise_lists: NoiseLists,
    auto_reject_flagged: bool = False,
) -> list[Candidate]:
    """One candidate per record, flags and reference membership populated.

    With ``auto_reject_flagged`` any flagged or reference-listed record starts
    rejected (with a reason) instead of pending. No record is ever dropped.
    """
    out: list[Candidate] = []
    for rec in records:
        flags = noise_filter(rec.lemma, noise_lists)
        in_ref = reference_check(rec.lemma, refs)
        cand = Candidate(
            lemma=rec.lemma,
            pos=rec.pos,
            freq=rec.freq,
            contexts=list(rec.contexts),
            auto_flags=flags,
            in_reference=in_ref,
        )
        if auto_reject_flagged and (flags or in_ref):
            cand.status = Status.REJECTED
            cand.reject_reason = _auto_reject_reason(flags, in_ref)
        out.append(cand)
    return out


def classify_candidates(
    cands: list[Candidate],
    stems,
    affixes,
    loan_lexicons: dict[str, set[str]],
    loan_overrides: dict | None = None,
    pos_overrides: dict | None = None,
) -> list[Candidate]:
    """Fill suggested labels (POS guess, derivation, loan type) in place.

    Topic is never suggested: it stays with the reviewer.
    """
    from .derivation import classify_loan, match_derivation
    from .morphodict import guess_pos

    for cand in cands:
        pos = cand.pos if cand.pos is not POS.UNKNOWN else guess_pos(cand.lemma, pos_overrides)
        deriv = match_derivation(cand.lemma, pos, stems, affixes)
        loan = classify_loan(cand.lemma, deriv, stems, loan_lexicons, loan_overrides)
        cand.suggested = ClassLabels(
            pos=pos,
            topic=None,
            loan_type=loan.loan_type,
            deriv_type=deriv.deriv_type,
            model=deriv.model,
        )
        cand.needs_review = loan.needs_review
    return cands


def write_candidates_json(candidates: list[Candidate], path: str | Path) -> None:
    payload = [c.as_dict() for c in candidates]
    Path(path).write_text(
        json.dumps(payload, ensure_ascii=False, indent=1) + "\n", encoding="utf-8"
    )


def read_candidates_json(path: str | Path) -> list[Candidate]:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    return [Candidate.from_dict(d) for d in payload]
