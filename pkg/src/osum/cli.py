"""Command-line entry points.

Subcommands: summarize, keywords, aggregate, evaluate, serve.  Exit
codes: 0 on success, 1 on I/O failure, 2 on bad flags (argparse).
Errors go to stderr only.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .aggregate import (
    AggregationConfig,
    LocalRetrievalClient,
    WEIGHT_METHODS,
    aggregate_rerank,
    formulate_query,
)
from .config import RunConfig
from .evaluation import (
    evaluate_corpus,
    format_sweep_table,
    lexicon_sentiment,
    load_references,
    sweep_evaluate,
    write_sweep_csv,
)
from .keywords import rake_keywords, textrank_keywords, tfidf_keywords
from .objectives import ObjectiveConfig, VARIANTS
from .opinion import AspectOntology, SentimentLexicon
from .optimizer import summarize
from .service import ServiceState, serve_forever
from .text import Document, TfIdfModel, load_stopwords


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_docs_dir(folder: str) -> list[Document]:
    docs = []
    for name in sorted(os.listdir(folder)):
        if name.endswith(".txt"):
            with open(os.path.join(folder, name), encoding="utf-8") as fh:
                docs.append(Document.from_text(os.path.splitext(name)[0], fh.read()))
    return docs


def _print_ranking(keywords, limit=None):
    for phrase, score in keywords[:limit]:
        print(f"{score:10.4f}  {phrase}")


def _alpha(parser: argparse.ArgumentParser, value: float) -> float:
    if not 0.0 <= value <= 1.0:
        parser.error("--alpha must be in [0, 1]")
    return value


def _nonneg(parser: argparse.ArgumentParser, flag: str, value: float) -> float:
    if value < 0:
        parser.error(f"{flag} must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="osum")
    parser.add_argument("--config", help="path to an INI config file (or set OSUM_CONFIG)")
    sub = parser.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("summarize", help="budgeted opinion summary of one document")
    ps.add_argument("--function", choices=VARIANTS, default=None)
    ps.add_argument("--alpha", type=float, default=None)
    ps.add_argument("--r", type=float, default=None)
    ps.add_argument("--budget", type=int, default=None)
    ps.add_argument("--input", default="-", help="input file, or - for stdin")
    ps.add_argument("--lexicon", default=None)
    ps.add_argument("--ontology", default=None)
    ps.add_argument("--trace", action="store_true", help="print the greedy trace")
    ps.add_argument("--format", choices=("text", "json"), default=None)

    pk = sub.add_parser("keywords", help="ranked keywords from one document")
    pk.add_argument("--method", choices=("tfidf", "rake", "textrank"), required=True)
    pk.add_argument("--input", default="-")
    pk.add_argument("--top", type=int, default=10)
    pk.add_argument("--corpus", default=None, help="directory for document-frequency stats")
    pk.add_argument("--stopwords", default=None)
    pk.add_argument("--emit-query", action="store_true")

    pa = sub.add_parser("aggregate", help="combine extractor rankings with retrieval feedback")
    pa.add_argument("--input", default="-")
    pa.add_argument("--systems", default=None, help="comma list of tfidf,rake,textrank")
    pa.add_argument("--corpus", required=True, help="description corpus directory")
    pa.add_argument("--weight", choices=WEIGHT_METHODS, default="kl-uni")
    pa.add_argument("--top", type=int, default=10)
    pa.add_argument("--emit-query", action="store_true")

    pe = sub.add_parser("evaluate", help="corpus evaluation against reference summaries")
    pe.add_argument("--docs", required=True)
    pe.add_argument("--refs", required=True)
    pe.add_argument("--sweep", action="store_true", help="run the full alpha/r/variant grid")
    pe.add_argument("--out", default=None, help="CSV output path for the sweep")
    pe.add_argument("--budget", type=int, default=None)
    pe.add_argument("--lexicon", default=None)
    pe.add_argument("--ontology", default=None)

    pv = sub.add_parser("serve", help="run the HTTP service")
    pv.add_argument("--port", type=int, default=None)
    pv.add_argument("--host", default="127.0.0.1")
    pv.add_argument("--static-dir", default=None, help="directory with the UI bundle")
    pv.add_argument("--lexicon", default=None)
    pv.add_argument("--ontology", default=None)

    return parser


def _cmd_summarize(parser, args, run_cfg: RunConfig) -> int:
    alpha = _alpha(parser, args.alpha if args.alpha is not None else run_cfg.alpha)
    r = _nonneg(parser, "--r", args.r if args.r is not None else run_cfg.r)
    budget = args.budget if args.budget is not None else run_cfg.budget
    if budget < 0:
        parser.error("--budget must be >= 0")
    cfg = ObjectiveConfig(
        variant=args.function or run_cfg.function,
        alpha=alpha,
        r=r,
        budget=budget,
        gamma_sat=run_cfg.gamma_sat,
        lambda0=run_cfg.lambda0,
    )
    try:
        text = _read_text(args.input)
        lexicon = SentimentLexicon.load(args.lexicon or run_cfg.lexicon)
        ontology = AspectOntology.load(args.ontology or run_cfg.ontology)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    doc = Document.from_text("input", text)
    summary = summarize(doc, cfg, lexicon, ontology)
    out_format = args.format or ("json" if run_cfg.output_format == "json" else "text")
    if out_format == "json":
        print(
            json.dumps(
                {
                    "summary": summary.text,
                    "selectedIndices": list(summary.indices),
                    "parameters": {
                        "function": cfg.variant,
                        "alpha": cfg.alpha,
                        "r": cfg.r,
                        "budget": cfg.budget,
                    },
                    "objectiveValue": summary.objective,
                }
            )
        )
    else:
        print(summary.text)
        if args.trace and summary.trace is not None:
            for step in summary.trace.steps:
                flag = "accepted" if step.accepted else "skipped"
                print(
                    f"# candidate={step.candidate} gain={step.gain:.6f} "
                    f"ratio={step.ratio:.6f} {flag}",
                    file=sys.stderr,
                )
    return 0


def _cmd_keywords(parser, args, run_cfg: RunConfig) -> int:
    if args.top < 1:
        parser.error("--top must be >= 1")
    try:
        text = _read_text(args.input)
        stopwords = load_stopwords(args.stopwords or run_cfg.stopwords)
        corpus_docs = _load_docs_dir(args.corpus) if args.corpus else []
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    doc = Document.from_text("input", text)
    if args.method == "tfidf":
        if corpus_docs:
            model = TfIdfModel.from_documents(corpus_docs + [doc])
        else:
            # No corpus: sentences act as pseudo-documents for the df stats.
            entries = {f"{doc.id}#{s.index}": list(s.tokens) for s in doc.sentences}
            entries[doc.id] = doc.tokens()
            model = TfIdfModel(entries)
        keywords = tfidf_keywords(doc, model, k=args.top, stopwords=stopwords)
    elif args.method == "rake":
        keywords = rake_keywords(doc, stoplist=stopwords)[: args.top]
    else:
        keywords = textrank_keywords(doc, stopwords=stopwords)[: args.top]
    _print_ranking(keywords)
    if args.emit_query and keywords:
        print(formulate_query(keywords).serialize())
    return 0


def _cmd_aggregate(parser, args, run_cfg: RunConfig) -> int:
    systems_arg = args.systems if args.systems is not None else run_cfg.extractors
    names = [s.strip() for s in systems_arg.split(",") if s.strip()]
    unknown = set(names) - {"tfidf", "rake", "textrank"}
    if unknown:
        parser.error(f"--systems contains unknown extractors: {sorted(unknown)}")
    try:
        text = _read_text(args.input)
        client = LocalRetrievalClient(args.corpus)
        stopwords = load_stopwords(run_cfg.stopwords)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    doc = Document.from_text("input", text)
    corpus_docs = _load_docs_dir(args.corpus)
    model = TfIdfModel.from_documents(corpus_docs + [doc])
    systems = []
    for name in names:
        if name == "tfidf":
            systems.append((name, tfidf_keywords(doc, model, k=args.top, stopwords=stopwords)))
        elif name == "rake":
            systems.append((name, rake_keywords(doc, stoplist=stopwords)[: args.top]))
        else:
            systems.append((name, textrank_keywords(doc, stopwords=stopwords)[: args.top]))
    cfg = AggregationConfig(weight_method=args.weight)
    combined = aggregate_rerank(doc, systems, client, cfg)
    _print_ranking(combined, args.top)
    if args.emit_query and combined:
        print(formulate_query(combined).serialize())
    return 0


def _cmd_evaluate(parser, args, run_cfg: RunConfig) -> int:
    budget = args.budget if args.budget is not None else run_cfg.budget
    if budget < 0:
        parser.error("--budget must be >= 0")
    try:
        docs = _load_docs_dir(args.docs)
        refs = load_references(args.refs)
        lexicon = SentimentLexicon.load(args.lexicon or run_cfg.lexicon)
        ontology = AspectOntology.load(args.ontology or run_cfg.ontology)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sentiment = lexicon_sentiment(lexicon)
    if args.sweep:
        rows = sweep_evaluate(docs, refs, lexicon, ontology, sentiment, budget=budget)
        print(format_sweep_table(rows))
        if args.out:
            write_sweep_csv(rows, args.out)
            print(f"wrote {args.out}", file=sys.stderr)
        return 0
    cfg = ObjectiveConfig(
        variant=run_cfg.function, alpha=run_cfg.alpha, r=run_cfg.r, budget=budget
    )
    report = evaluate_corpus(
        docs, refs, lambda d: summarize(d, cfg, lexicon, ontology), sentiment
    )
    print(
        f"rouge1={report['rouge1']:.4f} rouge2={report['rouge2']:.4f} "
        f"corr={report['corr']:.4f} evaluated={report['evaluated']} "
        f"skipped={report['skipped']}"
    )
    return 0


def _cmd_serve(parser, args, run_cfg: RunConfig) -> int:
    port = args.port if args.port is not None else run_cfg.port
    static_dir = args.static_dir or run_cfg.static_dir
    if static_dir is None and os.path.isdir(os.path.join("frontend", "dist")):
        static_dir = os.path.join("frontend", "dist")
    try:
        state = ServiceState.create(
            lexicon_path=args.lexicon or run_cfg.lexicon,
            ontology_path=args.ontology or run_cfg.ontology,
            defaults=ObjectiveConfig(
                variant=run_cfg.function,
                alpha=run_cfg.alpha,
                r=run_cfg.r,
                budget=run_cfg.budget,
            ),
            static_dir=static_dir,
        )
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    serve_forever(state, port=port, host=args.host)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        run_cfg = RunConfig.load(args.config)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    handlers = {
        "summarize": _cmd_summarize,
        "keywords": _cmd_keywords,
        "aggregate": _cmd_aggregate,
        "evaluate": _cmd_evaluate,
        "serve": _cmd_serve,
    }
    return handlers[args.command](parser, args, run_cfg)


def entry() -> None:  # console_scripts hook
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
