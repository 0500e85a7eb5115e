from __future__ import annotations

import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from neolex.corpus import (
    CorpusFormatError,
    DocKind,
    IngestReport,
    RejectReason,
    corpus_stats,
    detect_language,
    ingest_corpus,
    normalize,
    tokenize,
)

from conftest import make_doc

TEXTY = st.text(alphabet="абвгдеёжзиклмнопрстуфхцчшщыьэюя АБВЕЁ ab12.,!-—і", max_size=80)


def _write_jsonl(path, rows):
    with path.open("w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(row if isinstance(row, str) else json.dumps(row, ensure_ascii=False))
            fh.write("\n")


class TestIngest:
    def test_valid_lines_pass_through_in_order(self, tmp_path):
        path = tmp_path / "c.jsonl"
        _write_jsonl(path, [{"id": f"d{i}", "kind": "post", "text": "привет"} for i in range(3)])
        docs = list(ingest_corpus(path))
        assert [d.id for d in docs] == ["d0", "d1", "d2"]
        assert all(d.kind is DocKind.POST for d in docs)

    def test_skip_mode_counts_malformed(self, tmp_path):
        path = tmp_path / "c.jsonl"
        _write_jsonl(
            path,
            [
                {"id": "a", "kind": "post", "text": "раз"},
                "{broken json",
                {"id": "b", "kind": "comment", "text": "два"},
            ],
        )
        report = IngestReport()
        docs = list(ingest_corpus(path, on_error="skip", report=report))
        assert [d.id for d in docs] == ["a", "b"]
        assert report.skipped == 1

    def test_abort_mode_raises_with_line_number(self, tmp_path):
        path = tmp_path / "c.jsonl"
        _write_jsonl(path, [{"id": "a", "kind": "post", "text": "x"}, '{"id": 5}'])
        with pytest.raises(CorpusFormatError) as err:
            list(ingest_corpus(path, on_error="abort"))
        assert err.value.line_no == 2

    def test_bad_kind_and_missing_fields_are_malformed(self, tmp_path):
        path = tmp_path / "c.jsonl"
        _write_jsonl(
            path,
            [
                {"id": "a", "kind": "status", "text": "x"},
                {"kind": "post", "text": "x"},
                {"id": "b", "kind": "post"},
                {"id": "c", "kind": "post", "text": "ок"},
            ],
        )
        report = IngestReport()
        docs = list(ingest_corpus(path, report=report))
        assert [d.id for d in docs] == ["c"]
        assert report.skipped == 3

    def test_unknown_fields_ignored_and_optional_parsed(self, tmp_path):
        path = tmp_path / "c.jsonl"
        _write_jsonl(
            path,
            [{"id": "a", "kind": "post", "text": "x", "created_at": "2013-11-13T10:00:00Z", "user": "u1", "lang": "ru"}],
        )
        (d,) = list(ingest_corpus(path))
        assert d.created_at is not None and d.created_at.year == 2013
        assert d.user == "u1"

    def test_ten_thousand_line_fixture_against_line_counter(self, tmp_path):
        # Oracle: an independent count of lines written, minus planted bad ones.
        rng = random.Random(42)
        path = tmp_path / "big.jsonl"
        planted_bad = 0
        with path.open("w", encoding="utf-8") as fh:
            for i in range(10_000):
                if rng.random() < 0.03:
                    fh.write("oops not json\n")
                    planted_bad += 1
                else:
                    fh.write(json.dumps({"id": f"d{i}", "kind": "comment", "text": "слово"}) + "\n")
        line_count = sum(1 for _ in path.open(encoding="utf-8"))
        assert line_count == 10_000
        report = IngestReport()
        docs = list(ingest_corpus(path, report=report))
        assert len(docs) == line_count - planted_bad
        assert report.skipped == planted_bad


class TestDetectLanguage:
    def test_all_cyrillic(self):
        v = detect_language("Привет мир")
        assert v.is_target and v.cyrillic_ratio == 1.0 and v.reject_reason is None

    def test_ukrainian_markers(self):
        v = detect_language("від україни")
        assert not v.is_target
        assert v.reject_reason is RejectReason.UKRAINIAN_MARKERS

    def test_low_cyrillic_hand_count(self):
        # letters: h e l l o м и р -> 3 Cyrillic of 8
        v = detect_language("hello мир")
        assert v.cyrillic_ratio == pytest.approx(3 / 8)
        assert not v.is_target and v.reject_reason is RejectReason.LOW_CYRILLIC

    def test_too_short(self):
        v = detect_language("ок!")
        assert not v.is_target and v.reject_reason is RejectReason.TOO_SHORT
        assert detect_language("").reject_reason is RejectReason.TOO_SHORT

    @given(TEXTY)
    @settings(max_examples=200)
    def test_total_and_exclusive(self, text):
        v = detect_language(text)
        assert 0.0 <= v.cyrillic_ratio <= 1.0
        assert v.is_target == (v.reject_reason is None)

    @given(TEXTY)
    @settings(max_examples=50)
    def test_deterministic(self, text):
        assert detect_language(text) == detect_language(text)


class TestTokenize:
    def test_punctuation_split(self):
        assert [t.normalized for t in tokenize("Привет, мир!")] == ["привет", "мир"]

    def test_hyphen_and_yo(self):
        # hand application: hyphen kept inside, ё normalized to е
        assert [t.normalized for t in tokenize("дресс-код и ещё")] == ["дресс-код", "и", "еще"]

    def test_empty(self):
        assert tokenize("") == []

    def test_edge_hyphens_never_attach(self):
        assert [t.normalized for t in tokenize("-код дресс- а--б")] == ["код", "дресс", "а", "б"]

    def test_latin_and_digits_are_separators(self):
        assert [t.normalized for t in tokenize("пост2013 postпост")] == ["пост", "пост"]

    def test_offsets_address_surface(self):
        text = "Я видел Ёжика"
        for tok in tokenize(text):
            assert text[tok.offset : tok.offset + len(tok.surface)] == tok.surface

    @given(TEXTY, TEXTY)
    @settings(max_examples=200)
    def test_locality_under_space_join(self, a, b):
        assert len(tokenize(a + " " + b)) == len(tokenize(a)) + len(tokenize(b))

    @given(TEXTY)
    @settings(max_examples=200)
    def test_normalized_shape(self, text):
        for tok in tokenize(text):
            assert tok.normalized == normalize(tok.surface)
            assert tok.normalized
            assert "ё" not in tok.normalized
            assert tok.normalized == tok.normalized.lower()
            assert not tok.normalized.startswith("-") and not tok.normalized.endswith("-")


class TestCorpusStats:
    def test_hand_computed_fixture(self):
        posts = [make_doc(f"p{i}", " ".join(["слово"] * 10)) for i in range(4)]
        comments = [make_doc(f"c{i}", " ".join(["мир"] * 5), DocKind.COMMENT) for i in range(2)]
        stats = corpus_stats(posts + comments)
        assert stats.n_texts == 6
        assert stats.n_posts == 4 and stats.n_comments == 2
        assert stats.mean_post_len == 10.0
        assert stats.mean_comment_len == 5.0
        assert stats.n_tokens_total == 50

    def test_empty_stream(self):
        stats = corpus_stats([])
        assert stats.n_texts == 0 and stats.n_tokens_total == 0
        assert stats.mean_post_len is None and stats.mean_comment_len is None

    def test_lang_filter_drops_foreign(self):
        docs = [make_doc("a", "привет мир"), make_doc("b", "hello world only latin")]
        assert corpus_stats(docs, lang_filter=True).n_texts == 1
        assert corpus_stats(docs, lang_filter=False).n_texts == 2

    def test_invariant_under_reordering(self):
        rng = random.Random(7)
        docs = [
            make_doc(f"d{i}", " ".join(rng.choice(["кот", "мир", "дом"]) for _ in range(rng.randint(1, 9))),
                     DocKind.POST if rng.random() < 0.5 else DocKind.COMMENT)
            for i in range(40)
        ]
        base = corpus_stats(docs)
        for _ in range(5):
            rng.shuffle(docs)
            assert corpus_stats(docs) == base

    def test_stats_merge_is_associative(self):
        docs = [make_doc(f"d{i}", "кот и мир") for i in range(9)]
        parts = [corpus_stats(docs[i::3]) for i in range(3)]
        merged = parts[0].merge(parts[1]).merge(parts[2])
        merged2 = parts[0].merge(parts[1].merge(parts[2]))
        assert merged == merged2 == corpus_stats(docs)

    def test_user_count_only_when_present(self):
        from neolex.corpus import CorpusDocument

        plain = corpus_stats([make_doc("a", "привет мир")])
        assert plain.n_users is None
        with_user = corpus_stats(
            [CorpusDocument(id="a", kind=DocKind.POST, text="привет мир", user="u1"),
             CorpusDocument(id="b", kind=DocKind.POST, text="привет мир", user="u1")]
        )
        assert with_user.n_users == 1
