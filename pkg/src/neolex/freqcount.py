"""Frequency dictionary over lemmas: sharded counting with an associative merge.

Counting is deterministic and shard-invariant: any partition of the corpus,
counted per shard and folded with :func:`merge` in any order, yields the same
map as a single pass.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .corpus import CorpusDocument, detect_language, tokenize
from .morphodict import MorphoDict, POS, lemmatize

Key = tuple[str, POS, bool]  # (lemma, pos, in_dictionary)


@dataclass
class FreqMap:
    counts: dict[Key, int] = field(default_factory=dict)
    total_tokens: int = 0

    def add(self, key: Key, n: int = 1) -> None:
        self.counts[key] = self.counts.get(key, 0) + n
        self.total_tokens += n


@dataclass
class FreqRecord:
    lemma: str
    pos: POS
    freq: int
    in_dictionary: bool
    contexts: list[str] = field(default_factory=list)


def count_shard(docs: Iterable[CorpusDocument], dictionary: MorphoDict) -> FreqMap:
    """Tokenize and lemmatize every on-language document into a frequency map."""
    fm = FreqMap()
    for doc in docs:
        if not detect_language(doc.text).is_target:
            continue
        for token in tokenize(doc.text):
            analysis = lemmatize(token, dictionary)
            fm.add((analysis.lemma, analysis.pos, analysis.in_dictionary))
    return fm


def merge(a: FreqMap, b: FreqMap) -> FreqMap:
    """Cell-wise sum; commutative and associative with the empty map as identity."""
    counts = dict(a.counts)
    for key, n in b.counts.items():
        counts[key] = counts.get(key, 0) + n
    return FreqMap(counts=counts, total_tokens=a.total_tokens + b.total_tokens)


def count_sharded(
    doc_shards: Sequence[Iterable[CorpusDocument]], dictionary: MorphoDict
) -> FreqMap:
    """Count each shard independently and fold the results."""
    result = FreqMap()
    for shard in doc_shards:
        result = merge(result, count_shard(shard, dictionary))
    return result


def threshold_filter(fm: FreqMap, min_freq: int = 1, oov_only: bool = False) -> list[FreqRecord]:
    """Records with freq >= min_freq, sorted by freq descending then lemma ascending."""
    if min_freq < 1:
        raise ValueError("min_freq must be >= 1")
    records = [
        FreqRecord(lemma=lemma, pos=pos, freq=freq, in_dictionary=in_dict)
        for (lemma, pos, in_dict), freq in fm.counts.items()
        if freq >= min_freq and not (oov_only and in_dict)
    ]
    records.sort(key=lambda r: (-r.freq, r.lemma))
    return records


def collect_contexts(
    docs: Iterable[CorpusDocument], targets: set[str], k: int = 20, window: int = 5
) -> dict[str, list[str]]:
    """KWIC snippets: the first ``k`` hits per target, ±``window`` tokens each.

    A hit is a token whose normalized form equals the target lemma (OOV lemmas
    are identity-lemmatized, so surface matching is exact for them).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    out: dict[str, list[str]] = {t: [] for t in targets}
    remaining = {t for t in targets}
    for doc in docs:
        if not remaining:
            break
        tokens = tokenize(doc.text)
        for i, token in enumerate(tokens):
            lemma = token.normalized
            if lemma not in targets or len(out[lemma]) >= k:
                continue
            lo = max(0, i - window)
            snippet = " ".join(t.normalized for t in tokens[lo : i + window + 1])
            out[lemma].append(snippet)
            if len(out[lemma]) >= k and lemma in remaining:
                remaining.discard(lemma)
    return out


FREQ_TSV_HEADER = "lemma\tpos\tin_dict\tfreq"


def write_freq_tsv(records: Iterable[FreqRecord], path: str | Path) -> None:
    with Path(path).open("w", encoding="utf-8") as fh:
        fh.write(FREQ_TSV_HEADER + "\n")
        for r in records:
            fh.write(f"{r.lemma}\t{r.pos}\t{int(r.in_dictionary)}\t{r.freq}\n")


def read_freq_tsv(path: str | Path) -> list[FreqRecord]:
    records: list[FreqRecord] = []
    with Path(path).open(encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line or line.startswith("#") or (line_no == 1 and line == FREQ_TSV_HEADER):
                continue
            lemma, pos_s, in_dict, freq = line.split("\t")
            records.append(
                FreqRecord(
                    lemma=lemma,
                    pos=POS.parse(pos_s),
                    freq=int(freq),
                    in_dictionary=bool(int(in_dict)),
                )
            )
    return records
