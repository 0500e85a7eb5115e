from __future__ import annotations

import json
import random
from pathlib import Path

import pytest

from neolex import data_path
from neolex.corpus import CorpusDocument, DocKind
from neolex.derivation import load_affixes, load_loan_lexicons, load_loan_overrides, load_stems
from neolex.lists import load_tsv_rows
from neolex.morphodict import load_dictionary

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def mini_dict():
    return load_dictionary(data_path("mini_dict.tsv"))


@pytest.fixture(scope="session")
def affixes():
    return load_affixes(data_path("affixes.tsv"))


@pytest.fixture(scope="session")
def stems():
    return load_stems(data_path("stems.tsv"))


@pytest.fixture(scope="session")
def loan_lexicons():
    return load_loan_lexicons(data_path("loans"))


@pytest.fixture(scope="session")
def loan_overrides():
    return load_loan_overrides(data_path("loan_overrides.tsv"))


@pytest.fixture(scope="session")
def gold_rows():
    """Rows of the shipped gold lexicon: word, pos, topic, loan, deriv, model, freq."""
    rows = [r for r in load_tsv_rows(data_path("gold_lexicon.tsv"), n_cols=7) if r[0] != "word"]
    assert len(rows) == 168
    return rows


@pytest.fixture(scope="session")
def funnel_manifest():
    return json.loads((FIXTURES / "funnel_manifest.json").read_text(encoding="utf-8"))


def make_doc(doc_id: str, text: str, kind: DocKind = DocKind.POST) -> CorpusDocument:
    return CorpusDocument(id=doc_id, kind=kind, text=text)


@pytest.fixture()
def doc():
    return make_doc


def gold_candidates(gold_rows):
    """Pending candidates for the 168 gold-lexicon words."""
    from neolex.candidates import Candidate
    from neolex.morphodict import POS

    return [
        Candidate(lemma=row[0], pos=POS.UNKNOWN, freq=int(row[6]))
        for row in gold_rows
    ]


def gold_labels(row):
    from neolex.candidates import ClassLabels
    from neolex.derivation import DerivType, LoanType
    from neolex.morphodict import POS

    word, pos_s, topic, loan_s, deriv_s, model, freq = row
    return ClassLabels(
        pos=POS.parse(pos_s),
        topic=topic,
        loan_type=LoanType.parse(loan_s),
        deriv_type=DerivType.parse(deriv_s) if deriv_s else None,
        model=model or None,
    )


def synthetic_corpus(n_tokens: int, seed: int, dictionary) -> list[CorpusDocument]:
    """Deterministic corpus of exactly ``n_tokens`` Cyrillic tokens.

    Mixes dictionary wordforms with out-of-vocabulary lemmas so both sides of
    the OOV boundary are exercised.
    """
    rng = random.Random(seed)
    wordforms = sorted(dictionary.entries)
    oov = ["лайкнуть", "репост", "фейсбук", "селфи", "хайп", "зачекинился"]
    vocab = wordforms + oov * 8
    docs: list[CorpusDocument] = []
    remaining = n_tokens
    i = 0
    while remaining > 0:
        size = min(rng.randint(4, 14), remaining)
        words = [rng.choice(vocab) for _ in range(size)]
        kind = DocKind.POST if rng.random() < 0.7 else DocKind.COMMENT
        docs.append(CorpusDocument(id=f"d{i}", kind=kind, text=" ".join(words)))
        remaining -= size
        i += 1
    return docs
