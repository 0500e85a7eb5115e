"""neolex command line: stats, freq, candidates, classify, review serve, export, report."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import data_path
from .candidates import NoiseLists, classify_candidates, extract_candidates, read_candidates_json, write_candidates_json
from .corpus import corpus_stats, ingest_corpus
from .derivation import load_affixes, load_loan_lexicons, load_loan_overrides, load_stems
from .freqcount import collect_contexts, count_shard, merge, read_freq_tsv, threshold_filter, write_freq_tsv, FreqMap
from .lists import load_wordlist
from .morphodict import load_dictionary, load_pos_overrides
from .review import ReviewService, aggregate_report, export_lexicon, load_state, read_lexicon_tsv


def _cmd_stats(args: argparse.Namespace) -> int:
    stats = corpus_stats(ingest_corpus(args.corpus), lang_filter=not args.no_lang_filter)
    if args.json:
        print(json.dumps(stats.as_dict(), ensure_ascii=False, indent=1))
        return 0
    d = stats.as_dict()
    width = max(len(k) for k in d)
    for key, value in d.items():
        if value is None:
            shown = "-"
        elif isinstance(value, float):
            shown = f"{value:.2f}"
        else:
            shown = f"{value}"
        print(f"{key:<{width}}  {shown}")
    return 0


def _cmd_freq(args: argparse.Namespace) -> int:
    dictionary = load_dictionary(args.dict)
    docs = list(ingest_corpus(args.corpus))
    if args.shards > 1:
        shards: list[list] = [[] for _ in range(args.shards)]
        for i, doc in enumerate(docs):
            shards[i % args.shards].append(doc)
        fm = FreqMap()
        for shard in shards:
            fm = merge(fm, count_shard(shard, dictionary))
    else:
        fm = count_shard(docs, dictionary)
    records = threshold_filter(fm, min_freq=args.min_freq, oov_only=args.oov_only)
    write_freq_tsv(records, args.output)
    print(f"{len(records)} records ({fm.total_tokens} tokens counted) -> {args.output}", file=sys.stderr)
    return 0


def _cmd_candidates(args: argparse.Namespace) -> int:
    records = read_freq_tsv(args.freq)
    oov = [r for r in records if not r.in_dictionary]
    if len(oov) != len(records):
        print(f"dropping {len(records) - len(oov)} in-dictionary records", file=sys.stderr)
    noise = NoiseLists.load(args.noise) if args.noise else NoiseLists.load(data_path("noise"))
    refs = [load_wordlist(p) for p in sorted(Path(args.refs).glob("*.txt"))]
    if args.corpus:
        targets = {r.lemma for r in oov}
        ctx = collect_contexts(ingest_corpus(args.corpus), targets, k=args.contexts)
        for r in oov:
            r.contexts = ctx.get(r.lemma, [])
    cands = extract_candidates(oov, refs, noise, auto_reject_flagged=args.auto_reject)
    write_candidates_json(cands, args.output)
    pending = sum(1 for c in cands if c.status.value == "pending")
    print(f"{len(cands)} candidates ({pending} pending) -> {args.output}", file=sys.stderr)
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    cands = read_candidates_json(args.candidates)
    stems = load_stems(args.stems or data_path("stems.tsv"))
    affixes = load_affixes(args.affixes or data_path("affixes.tsv"))
    loans = load_loan_lexicons(args.loans or data_path("loans"))
    overrides = load_loan_overrides(args.overrides) if args.overrides else load_loan_overrides(data_path("loan_overrides.tsv"))
    pos_overrides = load_pos_overrides(args.pos_overrides) if args.pos_overrides else load_pos_overrides(data_path("pos_overrides.tsv"))
    classify_candidates(cands, stems, affixes, loans, overrides, pos_overrides)
    write_candidates_json(cands, args.output)
    flagged = sum(1 for c in cands if c.needs_review)
    print(f"classified {len(cands)} candidates ({flagged} flagged for review) -> {args.output}", file=sys.stderr)
    return 0


def _cmd_review_serve(args: argparse.Namespace) -> int:
    from .api import serve

    service = ReviewService.open(args.candidates, args.log)
    serve(service, port=args.port, host=args.host, static_dir=args.static)
    return 0


def _cmd_export(args: argparse.Namespace) -> int:
    state = load_state(args.candidates, args.log)
    doc = export_lexicon(state, args.format)
    Path(args.output).write_text(doc, encoding="utf-8")
    print(f"{len(state.lexicon())} accepted entries -> {args.output}", file=sys.stderr)
    return 0


def _cmd_report(args: argparse.Namespace) -> int:
    lexicon = read_lexicon_tsv(args.lexicon)
    report = aggregate_report(lexicon)
    if args.json:
        print(json.dumps(report.as_dict(), ensure_ascii=False, indent=1))
        return 0
    print(f"lexicon size: {report.size}")
    print(f"underived: {report.underived_count}   derived: {report.derived_count}")
    for title, breakdown in [
        ("part of speech", report.by_pos),
        ("loan type", report.by_loan_type),
        ("derivation type", report.by_deriv_type),
        ("model", report.by_model),
        ("topic", report.by_topic),
    ]:
        print(f"\nby {title}:")
        for key, count in sorted(breakdown.items(), key=lambda kv: (-kv[1], kv[0])):
            print(f"  {key or '(none)':<20} {count}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="neolex", description="Neologism mining pipeline for Russian social-media corpora")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="corpus statistics")
    p.add_argument("corpus")
    p.add_argument("--no-lang-filter", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("freq", help="build the frequency dictionary")
    p.add_argument("corpus")
    p.add_argument("--dict", required=True)
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--min-freq", type=int, default=1)
    p.add_argument("--oov-only", action="store_true")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_freq)

    p = sub.add_parser("candidates", help="noise-filter OOV records into review candidates")
    p.add_argument("freq")
    p.add_argument("--refs", required=True, help="directory of reference wordlists (*.txt)")
    p.add_argument("--noise", help="directory of noise stoplists (defaults to packaged lists)")
    p.add_argument("--auto-reject", action="store_true")
    p.add_argument("--corpus", help="corpus for KWIC context snippets")
    p.add_argument("--contexts", type=int, default=20)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_candidates)

    p = sub.add_parser("classify", help="suggest derivation / loan labels for candidates")
    p.add_argument("candidates")
    p.add_argument("--stems")
    p.add_argument("--affixes")
    p.add_argument("--loans", help="directory with per-language wordlists")
    p.add_argument("--overrides")
    p.add_argument("--pos-overrides")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("review", help="review service")
    review_sub = p.add_subparsers(dest="review_command", required=True)
    ps = review_sub.add_parser("serve", help="run the review HTTP service")
    ps.add_argument("--candidates", required=True)
    ps.add_argument("--log", required=True)
    ps.add_argument("--port", type=int, default=8400)
    ps.add_argument("--host", default="127.0.0.1")
    ps.add_argument("--static", help="directory of built frontend assets to serve at /")
    ps.set_defaults(func=_cmd_review_serve)

    p = sub.add_parser("export", help="export the accepted lexicon")
    p.add_argument("--candidates", required=True)
    p.add_argument("--log", required=True)
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_export)

    p = sub.add_parser("report", help="aggregate report over an exported lexicon")
    p.add_argument("lexicon")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
