"""Summary evaluation: ROUGE-N, sentiment correlation, and a small
Naive Bayes sentiment model for scoring documents and summaries.

The corpus evaluator reports mean ROUGE-1/2 F-scores against reference
summaries and the Pearson correlation between per-document and
per-summary sentiment, and can sweep the trade-off and cost-scaling
grids into a CSV.
"""

from __future__ import annotations

import csv
import logging
import math
import os
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .objectives import VARIANTS, ObjectiveConfig
from .opinion import AspectOntology, SentimentLexicon
from .optimizer import Summary, summarize
from .text import Document, light_stem, ngrams, tokenize

logger = logging.getLogger(__name__)

DEFAULT_ALPHAS = (0.0, 0.25, 0.5, 0.75, 1.0)
DEFAULT_RS = (0.0, 0.25, 0.5, 0.75, 1.0)
SWEEP_COLUMNS = ("alpha", "r", "variant", "rouge1", "rouge2", "corr")


@dataclass(frozen=True)
class RougeScore:
    precision: float
    recall: float
    f1: float


def rouge_n(
    reference: Sequence[str],
    candidate: Sequence[str],
    n: int,
    stem: bool = False,
    stopwords: Iterable[str] | None = None,
) -> RougeScore:
    """Clipped n-gram overlap between token lists, n in {1, 2}.

    Recall divides by the reference n-gram count, precision by the
    candidate's; an empty side yields an all-zero score.  Off by
    default, ``stem`` folds light inflections and ``stopwords`` drops
    the given words from both sides before matching.
    """
    if n not in (1, 2):
        raise ValueError("n must be 1 or 2")
    if stopwords is not None:
        stop = frozenset(stopwords)
        reference = [t for t in reference if t not in stop]
        candidate = [t for t in candidate if t not in stop]
    if stem:
        reference = [light_stem(t) for t in reference]
        candidate = [light_stem(t) for t in candidate]
    ref_counts = Counter(ngrams(reference, n))
    cand_counts = Counter(ngrams(candidate, n))
    if not ref_counts or not cand_counts:
        return RougeScore(0.0, 0.0, 0.0)
    matches = sum(min(cnt, cand_counts[g]) for g, cnt in ref_counts.items())
    recall = matches / sum(ref_counts.values())
    precision = matches / sum(cand_counts.values())
    f1 = 2 * precision * recall / (precision + recall) if precision + recall > 0 else 0.0
    return RougeScore(precision=precision, recall=recall, f1=f1)


def pearson(x: Sequence[float], y: Sequence[float]) -> float:
    """Sample Pearson correlation coefficient.

    Needs at least two points and nonzero variance on both sides.
    """
    if len(x) != len(y) or len(x) < 2:
        raise ValueError("need two same-length samples of size >= 2")
    n = len(x)
    mx = sum(x) / n
    my = sum(y) / n
    sxx = sum((a - mx) ** 2 for a in x)
    syy = sum((b - my) ** 2 for b in y)
    if sxx == 0.0 or syy == 0.0:
        raise ValueError("undefined correlation: zero variance")
    sxy = sum((a - mx) * (b - my) for a, b in zip(x, y))
    return sxy / math.sqrt(sxx * syy)


class NBModel:
    """Multinomial Naive Bayes over unigram (and optional bigram) counts.

    Add-one smoothing, log-space scoring.  Posteriors over the classes
    sum to 1; an input with no known features falls back to the priors.
    """

    def __init__(
        self,
        class_counts: Mapping[str, Counter],
        class_docs: Mapping[str, int],
        use_bigrams: bool = True,
    ):
        self.classes = sorted(class_counts)
        if not self.classes:
            raise ValueError("need at least one class")
        self.use_bigrams = use_bigrams
        self._counts = {c: Counter(class_counts[c]) for c in self.classes}
        self._totals = {c: sum(self._counts[c].values()) for c in self.classes}
        total_docs = sum(class_docs.values())
        self._log_prior = {c: math.log(class_docs[c] / total_docs) for c in self.classes}
        self.vocabulary = frozenset().union(*(self._counts[c].keys() for c in self.classes))

    def features(self, text: str) -> list[str]:
        toks = tokenize(text)
        feats = list(toks)
        if self.use_bigrams:
            feats.extend(ngrams(toks, 2))
        return feats

    def posterior(self, text: str) -> dict[str, float]:
        vocab_size = len(self.vocabulary)
        log_scores = {}
        for c in self.classes:
            score = self._log_prior[c]
            for f in self.features(text):
                if f not in self.vocabulary:
                    continue
                score += math.log(
                    (self._counts[c][f] + 1) / (self._totals[c] + vocab_size)
                )
            log_scores[c] = score
        peak = max(log_scores.values())
        expd = {c: math.exp(v - peak) for c, v in log_scores.items()}
        norm = sum(expd.values())
        return {c: v / norm for c, v in expd.items()}


def train_nb(
    labeled: Iterable[tuple[str, str]],
    use_bigrams: bool = True,
    min_feature_count: int = 1,
) -> NBModel:
    """Train on (text, label) pairs; every class needs a document.

    min_feature_count optionally drops rare features before smoothing.
    """
    class_counts: dict[str, Counter] = {}
    class_docs: dict[str, int] = {}
    for text, label in labeled:
        counts = class_counts.setdefault(label, Counter())
        class_docs[label] = class_docs.get(label, 0) + 1
        toks = tokenize(text)
        counts.update(toks)
        if use_bigrams:
            counts.update(ngrams(toks, 2))
    if not class_counts:
        raise ValueError("no training documents")
    if min_feature_count > 1:
        total: Counter = Counter()
        for counts in class_counts.values():
            total.update(counts)
        keep = {f for f, n in total.items() if n >= min_feature_count}
        class_counts = {
            c: Counter({f: n for f, n in counts.items() if f in keep})
            for c, counts in class_counts.items()
        }
    return NBModel(class_counts, class_docs, use_bigrams=use_bigrams)


def nb_sentiment(model: NBModel, text: str) -> float:
    """Posterior probability of the 'pos' class."""
    return model.posterior(text)["pos"]


def lexicon_sentiment(lexicon) -> Callable[[str], float]:
    """Mean per-token polarity under a sentiment lexicon.

    A convenient document/summary scorer when no trained classifier is
    around; normalizing by length keeps long texts comparable to short
    summaries.
    """

    def score(text: str) -> float:
        toks = tokenize(text)
        if not toks:
            return 0.0
        total = 0.0
        for tok in toks:
            pos, neg = lexicon.lookup(tok)
            total += pos - neg
        return total / len(toks)

    return score


def load_labeled_corpus(root: str) -> list[tuple[str, str]]:
    """Read a pos/ and neg/ directory layout of .txt files."""
    labeled: list[tuple[str, str]] = []
    for label in ("pos", "neg"):
        folder = os.path.join(root, label)
        if not os.path.isdir(folder):
            continue
        for name in sorted(os.listdir(folder)):
            if name.endswith(".txt"):
                with open(os.path.join(folder, name), encoding="utf-8") as fh:
                    labeled.append((fh.read(), label))
    return labeled


def load_references(folder: str) -> dict[str, str]:
    """Reference summaries keyed by filename stem."""
    refs: dict[str, str] = {}
    for name in sorted(os.listdir(folder)):
        if name.endswith(".txt"):
            with open(os.path.join(folder, name), encoding="utf-8") as fh:
                refs[os.path.splitext(name)[0]] = fh.read()
    return refs


def evaluate_corpus(
    docs: Sequence[Document],
    references: Mapping[str, str],
    summarizer: Callable[[Document], Summary | str],
    sentiment_of: Callable[[str], float],
) -> dict:
    """Mean ROUGE-1/2 F over the corpus plus sentiment correlation.

    Documents without a reference are skipped with a warning and
    counted in the report.
    """
    rouge1_scores: list[float] = []
    rouge2_scores: list[float] = []
    doc_sentiments: list[float] = []
    summary_sentiments: list[float] = []
    skipped = 0
    for doc in docs:
        ref = references.get(doc.id)
        if ref is None:
            logger.warning("no reference for document %s; skipping", doc.id)
            skipped += 1
            continue
        result = summarizer(doc)
        summary_text = result.text if isinstance(result, Summary) else result
        ref_tokens = tokenize(ref)
        cand_tokens = tokenize(summary_text)
        rouge1_scores.append(rouge_n(ref_tokens, cand_tokens, 1).f1)
        rouge2_scores.append(rouge_n(ref_tokens, cand_tokens, 2).f1)
        doc_sentiments.append(sentiment_of(doc.raw))
        summary_sentiments.append(sentiment_of(summary_text))
    evaluated = len(rouge1_scores)
    corr = 0.0
    if evaluated >= 2:
        try:
            corr = pearson(doc_sentiments, summary_sentiments)
        except ValueError:
            logger.warning("sentiment correlation undefined (zero variance); reporting 0")
    return {
        "rouge1": sum(rouge1_scores) / evaluated if evaluated else 0.0,
        "rouge2": sum(rouge2_scores) / evaluated if evaluated else 0.0,
        "corr": corr,
        "evaluated": evaluated,
        "skipped": skipped,
    }


def sweep_evaluate(
    docs: Sequence[Document],
    references: Mapping[str, str],
    lexicon: SentimentLexicon,
    ontology: AspectOntology,
    sentiment_of: Callable[[str], float],
    budget: int = 200,
    alphas: Sequence[float] = DEFAULT_ALPHAS,
    rs: Sequence[float] = DEFAULT_RS,
    variants: Sequence[str] = VARIANTS,
) -> list[dict]:
    """Evaluate every (alpha, r, variant) cell of the trade-off grid."""
    rows: list[dict] = []
    for variant in variants:
        for r in rs:
            for alpha in alphas:
                cfg = ObjectiveConfig(variant=variant, alpha=alpha, r=r, budget=budget)
                report = evaluate_corpus(
                    docs,
                    references,
                    lambda doc, c=cfg: summarize(doc, c, lexicon, ontology),
                    sentiment_of,
                )
                rows.append(
                    {
                        "alpha": alpha,
                        "r": r,
                        "variant": variant,
                        "rouge1": report["rouge1"],
                        "rouge2": report["rouge2"],
                        "corr": report["corr"],
                    }
                )
    return rows


def write_sweep_csv(rows: Iterable[Mapping], path: str) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=SWEEP_COLUMNS)
        writer.writeheader()
        for row in rows:
            writer.writerow({col: row[col] for col in SWEEP_COLUMNS})


def format_sweep_table(rows: Sequence[Mapping]) -> str:
    """Plain-text table of the sweep, one row per grid cell."""
    header = f"{'alpha':>6} {'r':>5} {'variant':>8} {'rouge1':>8} {'rouge2':>8} {'corr':>8}"
    lines = [header, "-" * len(header)]
    for row in rows:
        lines.append(
            f"{row['alpha']:>6.2f} {row['r']:>5.2f} {row['variant']:>8} "
            f"{row['rouge1']:>8.4f} {row['rouge2']:>8.4f} {row['corr']:>8.4f}"
        )
    return "\n".join(lines)
