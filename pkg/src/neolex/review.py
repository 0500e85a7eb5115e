"""Expert review workflow: append-only decision log, lexicon export, reports.

State is a pure fold of (candidate snapshot, decision log): replaying the same
log over the same snapshot always reproduces the same state hash. A decision
is fsync'd to the log before it is acknowledged or applied.
"""

from __future__ import annotations

import hashlib
import json
import os
import re
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path

from . import data_path
from .candidates import Candidate, ClassLabels, RejectReason, Status, read_candidates_json
from .derivation import DerivType, LoanType
from .lists import load_tsv_rows
from .morphodict import POS

MODEL_GRAMMAR = re.compile(r"([а-яё]+-)?ST(-[а-яё]+)*(-ST)?$")

EXPORT_HEADER = "word\tpos\ttopic\tloan_type\tderiv_type\tmodel\tfreq"


class Action(str, Enum):
    ACCEPT = "accept"
    REJECT = "reject"
    RELABEL = "relabel"
    REOPEN = "reopen"


class ValidationError(ValueError):
    """Decision violates the review invariants (maps to HTTP 422)."""


class UnknownLemmaError(KeyError):
    """Decision references a lemma absent from the snapshot (HTTP 404)."""


class LogCorruptError(ValueError):
    def __init__(self, message: str, line_no: int):
        super().__init__(f"decision log line {line_no}: {message}")
        self.line_no = line_no


def load_topics() -> list[str]:
    return [row[0] for row in load_tsv_rows(data_path("topics.txt"), n_cols=1)]


@dataclass(frozen=True)
class ReviewDecision:
    lemma: str
    action: Action
    reject_reason: RejectReason | None = None
    labels: ClassLabels | None = None
    decided_at: datetime | None = None
    reviewer: str = "anonymous"

    def as_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "action": self.action.value,
            "reject_reason": self.reject_reason.value if self.reject_reason else None,
            "labels": self.labels.as_dict() if self.labels else None,
            "decided_at": (self.decided_at or _utcnow()).isoformat(),
            "reviewer": self.reviewer,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ReviewDecision":
        return cls(
            lemma=d["lemma"],
            action=Action(d["action"]),
            reject_reason=RejectReason(d["reject_reason"]) if d.get("reject_reason") else None,
            labels=ClassLabels.from_dict(d.get("labels")),
            decided_at=datetime.fromisoformat(d["decided_at"]) if d.get("decided_at") else None,
            reviewer=d.get("reviewer") or "anonymous",
        )


@dataclass(frozen=True)
class LexiconEntry:
    word: str
    pos: POS
    topic: str
    loan_type: LoanType
    deriv_type: DerivType | None = None
    model: str | None = None
    freq: int = 0


@dataclass
class AggregateReport:
    size: int
    by_pos: dict[str, int]
    by_loan_type: dict[str, int]
    by_deriv_type: dict[str, int]
    by_model: dict[str, int]
    by_topic: dict[str, int]
    underived_count: int
    derived_count: int

    def as_dict(self) -> dict:
        return {
            "size": self.size,
            "by_pos": self.by_pos,
            "by_loan_type": self.by_loan_type,
            "by_deriv_type": self.by_deriv_type,
            "by_model": self.by_model,
            "by_topic": self.by_topic,
            "underived_count": self.underived_count,
            "derived_count": self.derived_count,
        }


def _utcnow() -> datetime:
    return datetime.now(timezone.utc)


def _merge_labels(old: ClassLabels | None, new: ClassLabels) -> ClassLabels:
    old = old or ClassLabels()
    return ClassLabels(
        pos=new.pos if new.pos is not None else old.pos,
        topic=new.topic if new.topic is not None else old.topic,
        loan_type=new.loan_type if new.loan_type is not None else old.loan_type,
        deriv_type=new.deriv_type if new.deriv_type is not None else old.deriv_type,
        model=new.model if new.model is not None else old.model,
    )


def validate_labels(labels: ClassLabels, topics: list[str]) -> None:
    if labels.topic is not None and labels.topic not in topics:
        raise ValidationError(f"unknown topic {labels.topic!r}")
    if labels.model is not None and not MODEL_GRAMMAR.fullmatch(labels.model):
        raise ValidationError(f"model {labels.model!r} does not match the model grammar")
    derived = labels.deriv_type is not None and labels.deriv_type is not DerivType.UNDERIVED
    if derived and labels.model is None:
        raise ValidationError("derived entries need a model string")
    if not derived and labels.model is not None:
        raise ValidationError("underived entries must not carry a model string")


class ReviewState:
    """Candidate snapshot plus the decisions applied so far."""

    def __init__(self, candidates: list[Candidate], topics: list[str] | None = None):
        self.candidates: dict[str, Candidate] = {}
        for cand in candidates:
            if cand.lemma in self.candidates:
                raise ValueError(f"duplicate candidate lemma {cand.lemma!r}")
            self.candidates[cand.lemma] = cand
        self.topics = topics if topics is not None else load_topics()
        self.decision_count = 0

    def get(self, lemma: str) -> Candidate:
        try:
            return self.candidates[lemma]
        except KeyError:
            raise UnknownLemmaError(lemma) from None

    def validate(self, decision: ReviewDecision) -> None:
        cand = self.get(decision.lemma)
        if decision.action is Action.ACCEPT:
            labels = _merge_labels(cand.labels or cand.suggested, decision.labels or ClassLabels())
            validate_labels(labels, self.topics)
            if not labels.complete():
                raise ValidationError("accept requires complete labels (pos, topic, loan type, and a model for derived entries)")
        elif decision.action is Action.REJECT:
            if decision.reject_reason is None:
                raise ValidationError("reject requires a reject_reason")
        elif decision.action is Action.RELABEL:
            if decision.labels is None:
                raise ValidationError("relabel requires labels")
            labels = _merge_labels(cand.labels, decision.labels)
            validate_labels(labels, self.topics)
            if cand.status is Status.ACCEPTED and not labels.complete():
                raise ValidationError("relabel would leave an accepted entry with incomplete labels")

    def apply(self, decision: ReviewDecision) -> Candidate:
        """Mutate state with an already-validated decision; last decision wins."""
        cand = self.get(decision.lemma)
        if decision.action is Action.ACCEPT:
            cand.labels = _merge_labels(cand.labels or cand.suggested, decision.labels or ClassLabels())
            cand.status = Status.ACCEPTED
            cand.reject_reason = None
        elif decision.action is Action.REJECT:
            cand.status = Status.REJECTED
            cand.reject_reason = decision.reject_reason
            if decision.labels is not None:
                cand.labels = _merge_labels(cand.labels, decision.labels)
        elif decision.action is Action.RELABEL:
            cand.labels = _merge_labels(cand.labels, decision.labels)
        elif decision.action is Action.REOPEN:
            cand.status = Status.PENDING
            cand.reject_reason = None  # labels survive a reopen
        self.decision_count += 1
        return cand

    def state_hash(self) -> str:
        payload = [self.candidates[lemma].as_dict() for lemma in sorted(self.candidates)]
        blob = json.dumps(payload, ensure_ascii=False, sort_keys=True).encode("utf-8")
        return hashlib.sha256(blob).hexdigest()

    def lexicon(self) -> list[LexiconEntry]:
        entries = []
        for cand in self.candidates.values():
            if cand.status is not Status.ACCEPTED:
                continue
            labels = cand.labels
            assert labels is not None and labels.complete()
            deriv = labels.deriv_type
            if deriv is DerivType.UNDERIVED:
                deriv = None
            entries.append(
                LexiconEntry(
                    word=cand.lemma,
                    pos=labels.pos,
                    topic=labels.topic,
                    loan_type=labels.loan_type,
                    deriv_type=deriv,
                    model=labels.model,
                    freq=cand.freq,
                )
            )
        entries.sort(key=lambda e: (e.topic, e.word))
        return entries


def load_state(candidates_path: str | Path, log_path: str | Path | None) -> ReviewState:
    """Snapshot plus deterministic log replay; a corrupt line aborts the load."""
    state = ReviewState(read_candidates_json(candidates_path))
    if log_path is None:
        return state
    log_path = Path(log_path)
    if not log_path.exists():
        return state
    with log_path.open(encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                decision = ReviewDecision.from_dict(json.loads(line))
                state.validate(decision)
            except (json.JSONDecodeError, KeyError, ValueError) as exc:
                raise LogCorruptError(str(exc), line_no) from exc
            state.apply(decision)
    return state


class ReviewService:
    """Single-writer service wrapper: validate, persist durably, then apply."""

    def __init__(self, state: ReviewState, log_path: str | Path):
        self.state = state
        self.log_path = Path(log_path)
        self._write_lock = threading.Lock()

    @classmethod
    def open(cls, candidates_path: str | Path, log_path: str | Path) -> "ReviewService":
        return cls(load_state(candidates_path, log_path), log_path)

    def decide(self, decision: ReviewDecision) -> Candidate:
        if decision.decided_at is None:
            decision = ReviewDecision(
                lemma=decision.lemma,
                action=decision.action,
                reject_reason=decision.reject_reason,
                labels=decision.labels,
                decided_at=_utcnow(),
                reviewer=decision.reviewer,
            )
        with self._write_lock:
            self.state.validate(decision)  # log stays untouched on invalid input
            line = json.dumps(decision.as_dict(), ensure_ascii=False, sort_keys=True)
            with self.log_path.open("a", encoding="utf-8") as fh:
                fh.write(line + "\n")
                fh.flush()
                os.fsync(fh.fileno())
            return self.state.apply(decision)


def export_lexicon(state: ReviewState, fmt: str = "tsv") -> str:
    """Accepted entries only, lexicon column order, sorted by (topic, word)."""
    return render_lexicon(state.lexicon(), fmt)


def render_lexicon(entries: list[LexiconEntry], fmt: str = "tsv") -> str:
    if fmt == "tsv":
        lines = [EXPORT_HEADER]
        for e in entries:
            lines.append(
                "\t".join(
                    [
                        e.word,
                        str(e.pos),
                        e.topic,
                        str(e.loan_type),
                        str(e.deriv_type) if e.deriv_type else "",
                        e.model or "",
                        str(e.freq),
                    ]
                )
            )
        return "\n".join(lines) + "\n"
    if fmt == "json":
        payload = [
            {
                "word": e.word,
                "pos": str(e.pos),
                "topic": e.topic,
                "loan_type": str(e.loan_type),
                "deriv_type": str(e.deriv_type) if e.deriv_type else None,
                "model": e.model,
                "freq": e.freq,
            }
            for e in entries
        ]
        return json.dumps(payload, ensure_ascii=False, indent=1) + "\n"
    raise ValueError(f"unknown export format {fmt!r}")


def read_lexicon_tsv(path: str | Path) -> list[LexiconEntry]:
    entries: list[LexiconEntry] = []
    for row in load_tsv_rows(path, n_cols=7):
        word, pos_s, topic, loan_s, deriv_s, model, freq = row
        if word == "word":  # header
            continue
        entries.append(
            LexiconEntry(
                word=word,
                pos=POS.parse(pos_s),
                topic=topic,
                loan_type=LoanType.parse(loan_s),
                deriv_type=DerivType.parse(deriv_s) if deriv_s else None,
                model=model or None,
                freq=int(freq),
            )
        )
    return entries


def parse_lexicon(text: str, fmt: str = "tsv") -> list[LexiconEntry]:
    if fmt == "json":
        payload = json.loads(text)
        return [
            LexiconEntry(
                word=d["word"],
                pos=POS.parse(d["pos"]),
                topic=d["topic"],
                loan_type=LoanType.parse(d["loan_type"]),
                deriv_type=DerivType.parse(d["deriv_type"]) if d.get("deriv_type") else None,
                model=d.get("model") or None,
                freq=int(d["freq"]),
            )
            for d in payload
        ]
    entries = []
    for line in text.splitlines():
        if not line.strip() or line == EXPORT_HEADER or line.startswith("#"):
            continue
        word, pos_s, topic, loan_s, deriv_s, model, freq = line.split("\t")
        entries.append(
            LexiconEntry(
                word=word,
                pos=POS.parse(pos_s),
                topic=topic,
                loan_type=LoanType.parse(loan_s),
                deriv_type=DerivType.parse(deriv_s) if deriv_s else None,
                model=model or None,
                freq=int(freq),
            )
        )
    return entries


def aggregate_report(lexicon: list[LexiconEntry]) -> AggregateReport:
    """Per-axis exact counts; every breakdown sums to the lexicon size."""
    by_pos: dict[str, int] = {}
    by_loan: dict[str, int] = {}
    by_deriv: dict[str, int] = {}
    by_model: dict[str, int] = {}
    by_topic: dict[str, int] = {}
    derived = 0
    for e in lexicon:
        by_pos[str(e.pos)] = by_pos.get(str(e.pos), 0) + 1
        by_loan[str(e.loan_type)] = by_loan.get(str(e.loan_type), 0) + 1
        dkey = str(e.deriv_type) if e.deriv_type else ""
        by_deriv[dkey] = by_deriv.get(dkey, 0) + 1
        mkey = e.model or ""
        by_model[mkey] = by_model.get(mkey, 0) + 1
        by_topic[e.topic] = by_topic.get(e.topic, 0) + 1
        if e.deriv_type is not None and e.deriv_type is not DerivType.UNDERIVED:
            derived += 1
    size = len(lexicon)
    report = AggregateReport(
        size=size,
        by_pos=dict(sorted(by_pos.items())),
        by_loan_type=dict(sorted(by_loan.items())),
        by_deriv_type=dict(sorted(by_deriv.items())),
        by_model=dict(sorted(by_model.items())),
        by_topic=dict(sorted(by_topic.items())),
        underived_count=size - derived,
        derived_count=derived,
    )
    for breakdown in (report.by_pos, report.by_loan_type, report.by_deriv_type, report.by_model, report.by_topic):
        assert sum(breakdown.values()) == size
    return report
