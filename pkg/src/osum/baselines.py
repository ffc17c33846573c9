"""Reference summarizers to compare the submodular system against.

All baselines respect the word budget and return sentences in document
order.  Budget handling is a scan: a sentence that would overshoot the
remaining budget is skipped and scanning continues.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

import networkx as nx

from .keywords import weighted_pagerank
from .opinion import SentimentLexicon, subjectivity_score
from .optimizer import Summary, pick_sentences
from .text import Document, load_stopwords


def _budget_scan(order: Iterable[int], costs: Sequence[int], budget: float) -> list[int]:
    picked: list[int] = []
    remaining = budget
    for idx in order:
        if costs[idx] <= remaining:
            picked.append(idx)
            remaining -= costs[idx]
    return picked


def baseline_top(doc: Document, budget: float) -> Summary:
    """Sentences taken consecutively from the start of the review."""
    costs = [s.cost for s in doc.sentences]
    picked = _budget_scan(range(len(costs)), costs, budget)
    return Summary(sentences=pick_sentences(doc, picked), indices=tuple(sorted(picked)))


def baseline_top_subj(doc: Document, lexicon: SentimentLexicon, budget: float) -> Summary:
    """Most subjective sentences first, ties to the earlier sentence."""
    costs = [s.cost for s in doc.sentences]
    subj = [subjectivity_score(s, lexicon) for s in doc.sentences]
    order = sorted(range(len(costs)), key=lambda i: (-subj[i], i))
    picked = _budget_scan(order, costs, budget)
    return Summary(sentences=pick_sentences(doc, picked), indices=tuple(sorted(picked)))


def baseline_lerman_sm(
    doc: Document, sentiment_of: Callable[[str], float], budget: float
) -> Summary:
    """Fill the budget with sentences whose sentiment is nearest the
    document's own sentiment score (greedy, ties to the earlier one)."""
    costs = [s.cost for s in doc.sentences]
    doc_senti = sentiment_of(doc.raw)
    diffs = [abs(doc_senti - sentiment_of(s.text)) for s in doc.sentences]
    order = sorted(range(len(costs)), key=lambda i: (diffs[i], i))
    picked = _budget_scan(order, costs, budget)
    return Summary(sentences=pick_sentences(doc, picked), indices=tuple(sorted(picked)))


def baseline_textrank(
    doc: Document,
    budget: float,
    damping: float = 0.85,
    tol: float = 1e-6,
    max_iter: int = 100,
    stopwords: Iterable[str] | None = None,
) -> Summary:
    """Sentences ranked by weighted PageRank on a shared-word graph.

    The edge between two sentences counts the distinct content words
    they have in common.
    """
    stop = load_stopwords() if stopwords is None else frozenset(stopwords)
    n = len(doc.sentences)
    content = [set(s.tokens) - stop for s in doc.sentences]
    weights: dict[tuple[int, int], float] = {}
    for i in range(n):
        for j in range(i + 1, n):
            shared = len(content[i] & content[j])
            if shared > 0:
                weights[(i, j)] = float(shared)
    scores = weighted_pagerank(range(n), weights, damping, max_iter, tol)
    order = sorted(range(n), key=lambda i: (-scores[i], i))
    costs = [s.cost for s in doc.sentences]
    picked = _budget_scan(order, costs, budget)
    return Summary(sentences=pick_sentences(doc, picked), indices=tuple(sorted(picked)))


def mincut_subjective(probabilities: Sequence[float], assoc_scale: float) -> set[int]:
    """Classify sentences as subjective via a minimum s-t cut.

    Sentence i hangs off the source with capacity p_i and off the sink
    with capacity 1 - p_i; every sentence pair is tied together with
    capacity assoc_scale / distance, so neighbors tend to share labels.
    The source side of the minimum cut is the subjective set.  With
    assoc_scale = 0 the classification reduces to thresholding p_i > 0.5.
    """
    n = len(probabilities)
    graph = nx.Graph()
    graph.add_nodes_from(["src", "sink"])
    for i, p in enumerate(probabilities):
        if not 0.0 <= p <= 1.0:
            raise ValueError("probabilities must lie in [0, 1]")
        graph.add_edge("src", i, capacity=float(p))
        graph.add_edge(i, "sink", capacity=float(1.0 - p))
    if assoc_scale > 0:
        for i in range(n):
            for j in range(i + 1, n):
                graph.add_edge(i, j, capacity=assoc_scale / (j - i))
    _, (source_side, _) = nx.minimum_cut(graph, "src", "sink")
    return {i for i in source_side if i != "src"}


def baseline_mincut(
    doc: Document, lexicon: SentimentLexicon, budget: float, assoc_scale: float = 0.1
) -> Summary:
    """Min-cut subjectivity classification, then top subjective sentences.

    The subjectivity probability is the monotone transform s / (1 + s)
    of the lexicon score.
    """
    subj = [subjectivity_score(s, lexicon) for s in doc.sentences]
    probs = [x / (1.0 + x) for x in subj]
    subjective = mincut_subjective(probs, assoc_scale)
    order = sorted(subjective, key=lambda i: (-subj[i], i))
    costs = [s.cost for s in doc.sentences]
    picked = _budget_scan(order, costs, budget)
    return Summary(sentences=pick_sentences(doc, picked), indices=tuple(sorted(picked)))
