"""Sweep the trade-off grid on a tiny synthetic corpus and compare the
submodular summarizer against the baselines.

    python demos/evaluation_sweep.py
"""

import logging

import numpy as np

from osum import (
    AspectOntology,
    Document,
    ObjectiveConfig,
    SentimentLexicon,
    baseline_lerman_sm,
    baseline_mincut,
    baseline_textrank,
    baseline_top,
    baseline_top_subj,
    evaluate_corpus,
    summarize,
    sweep_evaluate,
)
from osum.evaluation import format_sweep_table, lexicon_sentiment

BUDGET = 12


def build_corpus(rng, n_docs=8):
    lexicon = SentimentLexicon.load()
    praise = ["excellent", "superb", "charming", "moving"]
    pans = ["boring", "predictable", "contrived", "dull"]
    topics = [f"scene{i}" for i in range(20)]
    docs = []
    for d in range(n_docs):
        mood = praise if d % 2 == 0 else pans
        sentences = []
        for k in range(4):
            words = [topics[int(i)] for i in rng.choice(20, size=5, replace=False)]
            sentences.append("The plot covers " + " ".join(words) + ".")
        sentences.append(f"The acting felt {mood[d % 4]} and {mood[(d + 1) % 4]}.")
        docs.append(Document.from_text(f"doc{d}", " ".join(sentences)))
    return docs, lexicon


def main():
    # Pure-coverage summaries of this corpus carry no sentiment at all,
    # which the evaluator reports as correlation 0 (with a warning).
    logging.getLogger("osum").setLevel(logging.ERROR)
    rng = np.random.default_rng(7)
    docs, lexicon = build_corpus(rng)
    references = {d.id: d.raw for d in docs}
    ontology = AspectOntology.load()
    sentiment = lexicon_sentiment(lexicon)

    rows = sweep_evaluate(
        docs, references, lexicon, ontology, sentiment,
        budget=BUDGET, alphas=(0.0, 0.5, 1.0), rs=(0.0, 1.0), variants=("a1", "a4"),
    )
    print(format_sweep_table(rows))

    print("\nbaselines at the same budget:")
    baselines = {
        "top": lambda d: baseline_top(d, BUDGET),
        "top-subj": lambda d: baseline_top_subj(d, lexicon, BUDGET),
        "lerman-sm": lambda d: baseline_lerman_sm(d, sentiment, BUDGET),
        "textrank": lambda d: baseline_textrank(d, BUDGET),
        "mincut": lambda d: baseline_mincut(d, lexicon, BUDGET),
        "submodular a4": lambda d: summarize(
            d, ObjectiveConfig(variant="a4", alpha=0.5, budget=BUDGET), lexicon, ontology
        ),
    }
    for name, summarizer in baselines.items():
        report = evaluate_corpus(docs, references, summarizer, sentiment)
        print(f"  {name:>14}  rouge1 {report['rouge1']:.4f}  rouge2 {report['rouge2']:.4f}  "
              f"corr {report['corr']:+.4f}")


if __name__ == "__main__":
    main()
