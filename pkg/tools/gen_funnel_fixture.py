#!/usr/bin/env python3
"""Regenerate tests/fixtures/funnel_records.tsv and funnel_manifest.json.

Builds a deterministic 624-row triage input: the 168 gold-lexicon lemmas as
clean OOV records plus 456 planted rejects (stoplisted noise, reference-list
words, and synthetic short / mixed-script / Ukrainian strings). The manifest
freezes which row was planted for which reason.
"""

from __future__ import annotations

import json
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from neolex import data_path
from neolex.lists import load_tsv_rows, load_wordlist

OUT_DIR = Path(__file__).resolve().parents[1] / "tests" / "fixtures"
TARGET_TOTAL = 624

rng = random.Random(20130805)

gold = [r for r in load_tsv_rows(data_path("gold_lexicon.tsv"), n_cols=7) if r[0] != "word"]
clean = {row[0]: int(row[6]) for row in gold}
assert len(clean) == 168

abbr = sorted(load_wordlist(data_path("noise", "abbreviations.txt")))
frag = sorted(load_wordlist(data_path("noise", "fragments.txt")))
proper = sorted(load_wordlist(data_path("noise", "proper_nouns.txt")))
ref_dict = sorted(load_wordlist(data_path("refs", "dictionary_words.txt")))
ref_pre = sorted(load_wordlist(data_path("refs", "pre2000_corpus.txt")))

planted: dict[str, str] = {}
for words, reason in [
    (abbr, "abbreviation"),
    (frag, "fragment"),
    (proper, "proper_noun"),
    (ref_dict, "reference"),
    (ref_pre, "reference"),
]:
    for w in words:
        planted.setdefault(w, reason)

used = set(clean) | set(planted)
CONS = "бвгдзклмнпрстфх"
VOW = "аеиоу"
ALL = "абвгдежзиклмнопрстуфхцчшщыэюя"


def fresh(maker) -> str:
    while True:
        w = maker()
        if w not in used:
            used.add(w)
            return w


n_needed = TARGET_TOTAL - len(clean) - len(planted)
third = n_needed // 3
for _ in range(third):
    w = fresh(lambda: rng.choice(ALL) + rng.choice(ALL))
    planted[w] = "too_short"
for _ in range(third):
    w = fresh(
        lambda: rng.choice(CONS)
        + rng.choice(VOW)
        + rng.choice(CONS)
        + rng.choice("wxyz0123456789")
        + rng.choice(VOW)
    )
    planted[w] = "non_cyrillic"
while len(planted) + len(clean) < TARGET_TOTAL:
    w = fresh(
        lambda: rng.choice(CONS)
        + rng.choice("іїє")
        + rng.choice(CONS)
        + rng.choice(VOW)
        + rng.choice(CONS)
    )
    planted[w] = "ukrainian"

assert len(planted) == TARGET_TOTAL - len(clean), len(planted)

rows = [(w, f) for w, f in clean.items()]
rows += [(w, 16900 - 7 * i) for i, w in enumerate(sorted(planted))]
rows.sort(key=lambda wf: (-wf[1], wf[0]))

OUT_DIR.mkdir(parents=True, exist_ok=True)
with (OUT_DIR / "funnel_records.tsv").open("w", encoding="utf-8") as fh:
    fh.write("lemma\tpos\tin_dict\tfreq\n")
    for w, f in rows:
        fh.write(f"{w}\tUnknown\t0\t{f}\n")

manifest = {
    "total": TARGET_TOTAL,
    "clean_count": len(clean),
    "planted_count": len(planted),
    "clean": sorted(clean),
    "planted": dict(sorted(planted.items())),
}
(OUT_DIR / "funnel_manifest.json").write_text(
    json.dumps(manifest, ensure_ascii=False, indent=1) + "\n", encoding="utf-8"
)
print(f"funnel fixture: {len(clean)} clean + {len(planted)} planted = {TARGET_TOTAL}")
