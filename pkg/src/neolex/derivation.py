"""Derivation matching, Cyrillic→Latin transliteration, and loan-type classification.

The matcher decomposes a lemma over curated stem and affix inventories:
inflection ending off first, then composites (with or without the -о-
interfix), prefix+suffix, prefix-only and suffix-only splits. Every stem part
must be an inventory member; among valid decompositions the one with maximal
affix material wins, ties resolved composite-first. No decomposition means
the word is underived.

Inventory files:
  affixes:   ``affix<TAB>prefix|suffix|interfix[<TAB>label]`` — the optional
             label is the written form used in model strings when it differs
             from the matching surface (spelling-variant rows).
  stems:     ``stem<TAB>native|borrowed``
  loans:     one Latin word per line, one file per language
  overrides: ``lemma<TAB>loan_type[<TAB>root_count]``
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable

from .corpus import CorpusDocument, normalize, tokenize
from .lists import load_tsv_rows, load_wordlist
from .morphodict import POS


class DerivType(Enum):
    UNDERIVED = "Underived"
    SUFFIX = "Суффикс"
    PREFIX = "Префикс"
    PREFIX_SUFFIX = "Префикс+суффикс"
    COMPOSITE = "Композит"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, s: str) -> "DerivType":
        for member in cls:
            if member.value == s:
                return member
        raise ValueError(f"unknown derivation type {s!r}")


class LoanType(Enum):
    ANGLICISM = "Англицизм"
    GALLICISM = "Галлицизм"
    NATIVE = "Исконное"
    FROM_BORROWED_ROOTS = "Из заимств. корней"
    MIXED = "Смешанное"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, s: str) -> "LoanType":
        for member in cls:
            if member.value == s:
                return member
        raise ValueError(f"unknown loan type {s!r}")


NATIVE_TAG = "native"
BORROWED_TAG = "borrowed"

# Endings strippable before decomposition, longest first; POS not listed: none.
INFLECTION_ENDINGS: dict[POS, tuple[str, ...]] = {
    POS.V: ("ться", "ть", "ти"),
    POS.ADJ: ("ый", "ий", "ой", "ая"),
    POS.N: ("а", "я", "о", "е"),
}

_SOFTENING_VOWELS = frozenset("яюеиё")

MIN_STEM_LEN = 2


@dataclass(frozen=True)
class SuffixEntry:
    surface: str  # canonical matching form
    label: str  # written form used in the model string

    def match_surfaces(self, soft_ending: bool) -> tuple[str, ...]:
        # Soft-sign absorption: -нь + я/ю/е/и/ё surfaces without the ь (конь→коня).
        if soft_ending and self.surface.endswith("ь") and len(self.surface) > 1:
            return (self.surface, self.surface[:-1])
        return (self.surface,)


@dataclass
class AffixInventory:
    prefixes: list[str]
    suffixes: list[SuffixEntry]
    interfixes: list[str]
    inflection_endings: dict[POS, tuple[str, ...]] = field(
        default_factory=lambda: dict(INFLECTION_ENDINGS)
    )

    def model_strings(self) -> set[str]:
        """Every model string this inventory can ever emit (stems abstracted as ST)."""
        models = {"ST-ST"}
        models.update(f"ST-{i}-ST" for i in self.interfixes)
        models.update(f"{p}-ST" for p in self.prefixes)
        models.update(f"ST-{s.label}" for s in self.suffixes)
        models.update(f"{p}-ST-{s.label}" for p in self.prefixes for s in self.suffixes)
        return models


@dataclass
class StemInventory:
    stems: dict[str, str]  # stem -> native|borrowed

    def __contains__(self, stem: str) -> bool:
        return stem in self.stems

    def is_native(self, stem: str) -> bool:
        return self.stems.get(stem) == NATIVE_TAG


@dataclass(frozen=True)
class DerivationAnalysis:
    deriv_type: DerivType
    model: str | None
    stem1: str
    stem2: str | None = None
    prefix: str | None = None
    suffix_surface: str | None = None
    interfix: str | None = None
    ending: str = ""
    source_root_count: int | None = None

    def reconstruct(self) -> str:
        """Concatenate the matched pieces back into the input lemma."""
        parts = [
            self.prefix or "",
            self.stem1,
            self.interfix or "",
            self.stem2 or "",
            self.suffix_surface or "",
            self.ending,
        ]
        return "".join(parts)


def load_affixes(path: str | Path) -> AffixInventory:
    prefixes: list[str] = []
    suffixes: list[SuffixEntry] = []
    interfixes: list[str] = []
    for row in load_tsv_rows(path, n_cols=3, min_cols=2):
        affix = normalize(row[0])
        kind = row[1]
        if kind == "prefix":
            prefixes.append(affix)
        elif kind == "suffix":
            label = normalize(row[2]) if len(row) == 3 else affix
            suffixes.append(SuffixEntry(surface=affix, label=label))
        elif kind == "interfix":
            interfixes.append(affix)
        else:
            raise ValueError(f"{path}: unknown affix kind {kind!r}")
    return AffixInventory(prefixes=prefixes, suffixes=suffixes, interfixes=interfixes)


def load_stems(path: str | Path) -> StemInventory:
    stems: dict[str, str] = {}
    for row in load_tsv_rows(path, n_cols=2):
        stem, tag = normalize(row[0]), row[1]
        if tag not in (NATIVE_TAG, BORROWED_TAG):
            raise ValueError(f"{path}: bad origin tag {tag!r} for {stem!r}")
        if len(stem) < MIN_STEM_LEN:
            raise ValueError(f"{path}: stem {stem!r} shorter than {MIN_STEM_LEN}")
        stems[stem] = tag
    return StemInventory(stems=stems)


def load_loan_lexicons(directory: str | Path) -> dict[str, set[str]]:
    """One ``<lang>.txt`` wordlist per language inside ``directory``."""
    directory = Path(directory)
    lexicons: dict[str, set[str]] = {}
    for path in sorted(directory.glob("*.txt")):
        lexicons[path.stem] = {w.lower() for w in load_wordlist(path)}
    if "en" not in lexicons or "fr" not in lexicons:
        raise RuntimeError(f"loan lexicon directory {directory} must contain en.txt and fr.txt")
    return lexicons


def load_loan_overrides(path: str | Path) -> dict[str, tuple[LoanType, int | None]]:
    overrides: dict[str, tuple[LoanType, int | None]] = {}
    for row in load_tsv_rows(path, n_cols=3, min_cols=2):
        lemma = normalize(row[0])
        loan = LoanType.parse(row[1])
        count = int(row[2]) if len(row) == 3 else None
        overrides[lemma] = (loan, count)
    return overrides


def strip_inflection(lemma: str, pos: POS, affixes: AffixInventory) -> tuple[str, str]:
    """Remove the longest POS-licensed terminal ending (possibly none)."""
    for ending in affixes.inflection_endings.get(pos, ()):
        if lemma.endswith(ending) and len(lemma) - len(ending) >= MIN_STEM_LEN:
            return lemma[: -len(ending)], ending
    return lemma, ""


# Tie-break order after affix material: composite-first.
_TYPE_RANK = {
    DerivType.COMPOSITE: 0,
    DerivType.PREFIX_SUFFIX: 1,
    DerivType.PREFIX: 2,
    DerivType.SUFFIX: 3,
}


def _candidate_decompositions(
    core: str, ending: str, stems: StemInventory, affixes: AffixInventory
) -> list[tuple[int, int, int, str, DerivationAnalysis]]:
    soft = bool(ending) and ending[0] in _SOFTENING_VOWELS
    found: list[tuple[int, int, int, str, DerivationAnalysis]] = []

    def push(material: int, suffix_len: int, analysis: DerivationAnalysis) -> None:
        found.append(
            (-material, _TYPE_RANK[analysis.deriv_type], -suffix_len, analysis.model or "", analysis)
        )

    # Composites: plain juxtaposition and the -о- interfix.
    for i in range(MIN_STEM_LEN, len(core) - MIN_STEM_LEN + 1):
        left, right = core[:i], core[i:]
        if left in stems and right in stems:
            push(
                0,
                0,
                DerivationAnalysis(DerivType.COMPOSITE, "ST-ST", left, stem2=right, ending=ending),
            )
    for interfix in affixes.interfixes:
        w = len(interfix)
        for i in range(MIN_STEM_LEN, len(core) - MIN_STEM_LEN - w + 1):
            if core[i : i + w] != interfix:
                continue
            left, right = core[:i], core[i + w :]
            if left in stems and right in stems:
                push(
                    w,
                    0,
                    DerivationAnalysis(
                        DerivType.COMPOSITE,
                        f"ST-{interfix}-ST",
                        left,
                        stem2=right,
                        interfix=interfix,
                        ending=ending,
                    ),
                )

    for prefix in affixes.prefixes:
        if not core.startswith(prefix):
            continue
        rest = core[len(prefix) :]
        if len(rest) >= MIN_STEM_LEN and rest in stems:
            push(
                len(prefix),
                0,
                DerivationAnalysis(
                    DerivType.PREFIX, f"{prefix}-ST", rest, prefix=prefix, ending=ending
                ),
            )
        for entry in affixes.suffixes:
            for surf in entry.match_surfaces(soft):
                if not rest.endswith(surf):
                    continue
                mid = rest[: len(rest) - len(surf)]
                if len(mid) >= MIN_STEM_LEN and mid in stems:
                    push(
                        len(prefix) + len(entry.surface),
                        len(entry.surface),
                        DerivationAnalysis(
                            DerivType.PREFIX_SUFFIX,
                            f"{prefix}-ST-{entry.label}",
                            mid,
                            prefix=prefix,
                            suffix_surface=surf,
                            ending=ending,
                        ),
                    )

    for entry in affixes.suffixes:
        for surf in entry.match_surfaces(soft):
            if not core.endswith(surf):
                continue
            stem = core[: len(core) - len(surf)]
            if len(stem) >= MIN_STEM_LEN and stem in stems:
                push(
                    len(entry.surface),
                    len(entry.surface),
                    DerivationAnalysis(
                        DerivType.SUFFIX,
                        f"ST-{entry.label}",
                        stem,
                        suffix_surface=surf,
                        ending=ending,
                    ),
                )
    return found


def match_derivation(
    lemma: str, pos: POS, stems: StemInventory, affixes: AffixInventory
) -> DerivationAnalysis:
    """Best decomposition of ``lemma`` over the inventories, or Underived."""
    lemma = normalize(lemma)
    core, ending = strip_inflection(lemma, pos, affixes)
    candidates = _candidate_decompositions(core, ending, stems, affixes)
    if not candidates:
        return DerivationAnalysis(DerivType.UNDERIVED, None, stem1=lemma, ending="")
    candidates.sort(key=lambda item: (item[0], item[1], item[2], item[3], item[4].stem1))
    best = candidates[0][4]
    assert best.reconstruct() == lemma, f"reconstruction broke for {lemma}: {best}"
    return best


# ---------------------------------------------------------------------------
# Transliteration


# Longest-substitution-first table; per-key alternatives ordered most-likely
# first so real Latin spellings surface within the candidate cap.
TRANSLIT_TABLE: dict[str, tuple[str, ...]] = {
    "ейдж": ("adge", "age", "edge"),
    "акшн": ("action", "uction"),
    "айп": ("ype", "ipe", "ip"),
    "айк": ("ike", "ic"),
    "айт": ("ite", "it", "ight", "yte"),
    "айф": ("ife", "iph"),
    "айл": ("ile", "yle"),
    "айн": ("ine", "ain", "in"),
    "ейс": ("ace", "eis"),
    "эйс": ("ace", "eis"),
    "ейм": ("ame", "eim"),
    "ейк": ("ake", "eik"),
    "ейт": ("ate", "eit", "eight"),
    "ейн": ("ain", "ein", "ane"),
    "оут": ("ote", "out"),
    "эшн": ("ashion", "eshn"),
    "кшн": ("ction", "xn"),
    "екс": ("ex", "eks", "ecs"),
    "рен": ("ren", "ran"),
    "кн": ("ckn", "kn"),
    "оу": ("ou", "oa", "ow", "o"),
    "ай": ("i", "y", "igh", "ai"),
    "ей": ("ey", "ei", "a", "ay", "ai"),
    "эй": ("ey", "ay", "a", "ei"),
    "ау": ("ow", "au", "ou"),
    "аб": ("ab", "ub"),
    "ав": ("av", "ov"),
    "аг": ("ag", "ug"),
    "ап": ("ap", "up"),
    "ед": ("ed", "ead"),
    "ек": ("ek", "ack", "ec"),
    "еш": ("esh", "ash"),
    "эш": ("esh", "ash"),
    "ер": ("er", "ar", "err"),
    "дж": ("j", "g", "dge", "dg"),
    "кс": ("x", "ks", "cs"),
    "кв": ("qu", "kv"),
    "шн": ("shion", "shn"),
    "из": ("is", "iz", "ies", "eas", "ease"),
    "ив": ("iv", "ive"),
    "он": ("on", "one"),
    "ор": ("or", "ore"),
    "мм": ("mm", "m"),
    "нн": ("nn", "n"),
    "лл": ("ll", "l"),
    "тт": ("tt", "t"),
    "сс": ("ss", "s"),
    "пп": ("pp", "p"),
    "рр": ("rr", "r"),
    "фф": ("ff", "f"),
    "гг": ("gg", "g"),
    "кк": ("ck", "kk"),
    "дд": ("dd", "d"),
    "а": ("a",),
    "б": ("b",),
    "в": ("v", "w"),
    "г": ("g",),
    "д": ("d",),
    "е": ("e",),
    "ж": ("zh", "j", "g", "ge"),
    "з": ("z", "s", "se"),
    "и": ("i", "e", "ee", "ea", "y"),
    "й": ("y", "i", "j"),
    "к": ("c", "k"),
    "л": ("l",),
    "м": ("m", "mm"),
    "н": ("n",),
    "о": ("o",),
    "п": ("p",),
    "р": ("r", "rr"),
    "с": ("s", "c", "ce", "ss"),
    "т": ("t", "tt"),
    "у": ("u", "oo", "ou"),
    "ф": ("f", "ph"),
    "х": ("h", "kh"),
    "ц": ("ts", "c"),
    "ч": ("ch", "tch"),
    "ш": ("sh",),
    "щ": ("shch", "sch"),
    "ъ": ("",),
    "ы": ("y", "i"),
    "ь": ("",),
    "э": ("e", "a"),
    "ю": ("yu", "you", "u", "ju"),
    "я": ("ya", "ia", "ja"),
    "-": ("",),
}

_MAX_KEY_LEN = max(len(k) for k in TRANSLIT_TABLE)

TRANSLIT_CAP = 64


def _segment(lemma: str) -> list[tuple[str, ...]]:
    segments: list[tuple[str, ...]] = []
    i = 0
    while i < len(lemma):
        for width in range(min(_MAX_KEY_LEN, len(lemma) - i), 0, -1):
            key = lemma[i : i + width]
            if key in TRANSLIT_TABLE:
                segments.append(TRANSLIT_TABLE[key])
                i += width
                break
        else:
            segments.append((lemma[i],))
            i += 1
    return segments


def transliterate(lemma: str, cap: int = TRANSLIT_CAP) -> list[str]:
    """Latin spelling candidates, fewest substitutions first, capped.

    Substitution cost of a candidate is the number of positions that use a
    non-first alternative; candidates are enumerated by increasing cost so
    plausible spellings survive the cap.
    """
    segments = _segment(normalize(lemma))
    varying = [i for i, alts in enumerate(segments) if len(alts) > 1]
    base = [alts[0] for alts in segments]
    out: list[str] = []
    seen: set[str] = set()

    def emit(parts: list[str]) -> bool:
        s = "".join(parts)
        if s not in seen:
            seen.add(s)
            out.append(s)
        return len(out) >= cap

    if emit(base):
        return out
    for cost in range(1, len(varying) + 1):
        for combo in itertools.combinations(varying, cost):
            ranges = [range(1, len(segments[i])) for i in combo]
            for alt_ids in itertools.product(*ranges):
                parts = list(base)
                for pos_i, alt_i in zip(combo, alt_ids):
                    parts[pos_i] = segments[pos_i][alt_i]
                if emit(parts):
                    return out
    return out


def _within_edit_one(a: str, b: str) -> bool:
    if a == b:
        return True
    la, lb = len(a), len(b)
    if abs(la - lb) > 1:
        return False
    if la > lb:
        a, b, la, lb = b, a, lb, la
    i = j = 0
    edited = False
    while i < la and j < lb:
        if a[i] == b[j]:
            i += 1
            j += 1
            continue
        if edited:
            return False
        edited = True
        if la == lb:
            i += 1
        j += 1
    return True


# ---------------------------------------------------------------------------
# Loan classification


@dataclass(frozen=True)
class LoanAnalysis:
    loan_type: LoanType
    source_root_count: int | None = None
    needs_review: bool = False
    latin_form: str | None = None


def _two_root_split(word: str, lexicon: set[str]) -> bool:
    for i in range(3, len(word) - 2):
        if word[:i] in lexicon and word[i:] in lexicon:
            return True
    return False


def classify_loan(
    lemma: str,
    deriv: DerivationAnalysis,
    stems: StemInventory,
    loan_lexicons: dict[str, set[str]],
    overrides: dict[str, tuple[LoanType, int | None]] | None = None,
) -> LoanAnalysis:
    """Five-way origin classification; see the module docstring for the rules."""
    lemma = normalize(lemma)
    if overrides and lemma in overrides:
        loan, count = overrides[lemma]
        return LoanAnalysis(loan, count)
    if "en" not in loan_lexicons or "fr" not in loan_lexicons:
        raise RuntimeError("loan lexicons for 'en' and 'fr' are required")

    if deriv.deriv_type is DerivType.UNDERIVED:
        en, fr = loan_lexicons["en"], loan_lexicons["fr"]
        candidates = transliterate(lemma)
        for cand in candidates:
            if cand in en:
                roots = 2 if _two_root_split(cand, en) else 1
                return LoanAnalysis(LoanType.ANGLICISM, roots, latin_form=cand)
        for cand in candidates:
            if cand in fr:
                roots = 2 if _two_root_split(cand, fr) else 1
                return LoanAnalysis(LoanType.GALLICISM, roots, latin_form=cand)
        if stems.is_native(lemma):
            return LoanAnalysis(LoanType.NATIVE)
        for cand in candidates:
            for word in en:
                if _within_edit_one(cand, word):
                    return LoanAnalysis(LoanType.ANGLICISM, needs_review=True, latin_form=word)
        return LoanAnalysis(LoanType.NATIVE, needs_review=True)

    parts = [deriv.stem1] + ([deriv.stem2] if deriv.stem2 else [])
    native = [stems.is_native(p) for p in parts]
    if all(native):
        return LoanAnalysis(LoanType.NATIVE)
    if deriv.deriv_type is DerivType.COMPOSITE and not any(native):
        return LoanAnalysis(LoanType.FROM_BORROWED_ROOTS)
    return LoanAnalysis(LoanType.MIXED)


# ---------------------------------------------------------------------------
# Modifier-usage detection (the "stone wall" pattern)

NMOD_THRESHOLD = 0.7
NMOD_OR_N_THRESHOLD = 0.3


def modifier_ratio(
    lemma: str, docs: Iterable[CorpusDocument]
) -> tuple[float | None, POS]:
    """Share of occurrences where the lemma heads a hyphenated compound.

    Counts standalone tokens equal to the lemma plus compound-initial tokens
    ``lemma-X``; the ratio drives the Nmod / Nmod/N / N suggestion.
    """
    lemma = normalize(lemma)
    standalone = 0
    compound = 0
    for doc in docs:
        for token in tokenize(doc.text):
            w = token.normalized
            if w == lemma:
                standalone += 1
            elif "-" in w and w.split("-", 1)[0] == lemma:
                compound += 1
    total = standalone + compound
    if total == 0:
        return None, POS.N
    ratio = compound / total
    if ratio >= NMOD_THRESHOLD:
        return ratio, POS.NMOD
    if ratio >= NMOD_OR_N_THRESHOLD:
        return ratio, POS.NMOD_OR_N
    return ratio, POS.N
