"""Loading helpers for the line-oriented wordlist files used across the pipeline.

All lists are UTF-8, one entry per line, ``#`` starts a comment; entries are
normalized (lowercase, ё→е) on load.
"""

from __future__ import annotations

from pathlib import Path

from .corpus import normalize


def load_wordlist(path: str | Path) -> set[str]:
    words: set[str] = set()
    try:
        fh = Path(path).open(encoding="utf-8")
    except OSError as exc:
        raise RuntimeError(f"cannot read wordlist {path}: {exc}") from exc
    with fh:
        for line in fh:
            entry = line.split("#", 1)[0].strip()
            if entry:
                words.add(normalize(entry))
    return words


def load_wordlists(paths: list[str | Path]) -> list[set[str]]:
    return [load_wordlist(p) for p in paths]


def load_tsv_rows(path: str | Path, n_cols: int, min_cols: int | None = None) -> list[list[str]]:
    """Rows of a tab-separated file; raises with the line number on bad width."""
    rows: list[list[str]] = []
    lo = min_cols if min_cols is not None else n_cols
    with Path(path).open(encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = [p.strip() for p in line.split("\t")]
            if not (lo <= len(parts) <= n_cols):
                raise ValueError(f"{path}: line {line_no}: expected {lo}..{n_cols} columns, got {len(parts)}")
            rows.append(parts)
    return rows
