"""Rank aggregation of keyword lists with retrieval feedback.

Each extractor's list is turned into a weighted query, the query is run
against a description corpus, and the divergence between the article and
what came back decides how much that extractor's votes count in the
combined ranking.
"""

from __future__ import annotations

import math
import os
from collections import defaultdict
from dataclasses import dataclass
from typing import Mapping, Protocol, Sequence

from .keywords import RankedKeywords, ranked
from .text import Document, NGramDistribution, TfIdfModel, ngram_distribution, ngrams, tokenize

KL_UNI = "kl-uni"
BIGRAM_OVERLAP = "bigram"
KL_MIXED = "kl-mixed"
WEIGHT_METHODS = (KL_UNI, BIGRAM_OVERLAP, KL_MIXED)


@dataclass(frozen=True)
class WeightedQuery:
    """Ordered query terms with strictly decreasing integer weights.

    Serializes as ``term!weight AND term!weight ...`` with multi-word
    phrases parenthesized.
    """

    terms: tuple[tuple[str, int], ...]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("query must contain at least one term")
        prev = None
        for phrase, weight in self.terms:
            if not phrase:
                raise ValueError("query phrases must be non-empty")
            if prev is not None and weight >= prev:
                raise ValueError("query weights must be strictly decreasing")
            prev = weight

    def serialize(self) -> str:
        parts = []
        for phrase, weight in self.terms:
            rendered = f"({phrase})" if " " in phrase else phrase
            parts.append(f"{rendered}!{weight}")
        return " AND ".join(parts)

    def __str__(self) -> str:  # pragma: no cover - convenience
        return self.serialize()


def formulate_query(keywords: RankedKeywords, max_terms: int = 5) -> WeightedQuery:
    """Build the retrieval query from the top of a keyword ranking.

    The rank-i term gets weight 1000 - 50*(i-1).
    """
    if not keywords:
        raise ValueError("nothing to query")
    terms = tuple(
        (phrase, 1000 - 50 * i) for i, (phrase, _) in enumerate(keywords[:max_terms])
    )
    return WeightedQuery(terms=terms)


@dataclass(frozen=True)
class AggregationConfig:
    """Knobs for system weighting and retrieval depth."""

    weight_method: str = KL_UNI
    mix_uni: float = 0.5
    mix_bi: float = 0.5
    eps_weight: float = 1e-9
    top_k: int = 5
    max_query_terms: int = 5
    smoothing_eps: float = 1e-6

    def __post_init__(self):
        if self.weight_method not in WEIGHT_METHODS:
            raise ValueError(f"unknown weight method: {self.weight_method!r}")
        if self.mix_uni < 0 or self.mix_bi < 0 or self.mix_uni + self.mix_bi <= 0:
            raise ValueError("mix coefficients must be non-negative with a positive sum")
        if self.eps_weight <= 0:
            raise ValueError("eps_weight must be positive")


def kl_divergence(p: NGramDistribution, q: NGramDistribution) -> float:
    """Sum over p's support of p(u) * ln(p(u) / q(u)).

    Both distributions must be smoothed over the same union vocabulary;
    a zero or missing q(u) on p's support raises ValueError.
    """
    total = 0.0
    for u, pu in sorted(p.probs.items()):
        qu = q.probs.get(u, 0.0)
        if qu <= 0.0:
            raise ValueError(f"zero support in q for {u!r}")
        if pu > 0.0:
            total += pu * math.log(pu / qu)
    return total


def _smoothed_pair(
    tokens_p: Sequence[str], tokens_q: Sequence[str], n: int, eps: float
) -> tuple[NGramDistribution, NGramDistribution]:
    vocab = set(ngrams(tokens_p, n)) | set(ngrams(tokens_q, n))
    p = ngram_distribution(tokens_p, n, smoothing_eps=eps, vocab=vocab)
    q = ngram_distribution(tokens_q, n, smoothing_eps=eps, vocab=vocab)
    return p, q


def system_weight(
    article: Document, descriptions: Sequence[str], cfg: AggregationConfig
) -> float:
    """Retrieval-feedback weight of one keyword system.

    Descriptions are concatenated into a single text before comparison.
    A system that retrieved nothing weighs 0.
    """
    article_tokens = article.tokens()
    if not article_tokens:
        raise ValueError("article is empty")
    desc_tokens = tokenize(" ".join(descriptions))
    if not desc_tokens:
        return 0.0

    if cfg.weight_method == BIGRAM_OVERLAP:
        article_bigrams = set(ngrams(article_tokens, 2))
        if not article_bigrams:
            return 0.0
        desc_bigrams = set(ngrams(desc_tokens, 2))
        return len(article_bigrams & desc_bigrams) / len(article_bigrams)

    p_uni, q_uni = _smoothed_pair(article_tokens, desc_tokens, 1, cfg.smoothing_eps)
    kl_uni = kl_divergence(p_uni, q_uni)
    if cfg.weight_method == KL_UNI:
        return 1.0 / (kl_uni + cfg.eps_weight)

    # Mixed: unigram and bigram divergences combined linearly.
    try:
        p_bi, q_bi = _smoothed_pair(article_tokens, desc_tokens, 2, cfg.smoothing_eps)
        kl_bi = kl_divergence(p_bi, q_bi)
        bi_term = cfg.mix_bi / (kl_bi + cfg.eps_weight)
    except ValueError:
        bi_term = 0.0  # no bigrams on either side
    return bi_term + cfg.mix_uni / (kl_uni + cfg.eps_weight)


class RetrievalClient(Protocol):
    """Anything that can turn a weighted query into description texts."""

    def search(self, query: WeightedQuery, top_k: int) -> list[str]:
        ...


class LocalRetrievalClient:
    """Retrieval over a directory of UTF-8 .txt description files.

    Documents are scored by the weighted sum of per-term TF-IDF values;
    only positive-scoring documents are returned.
    """

    def __init__(self, corpus_dir: str):
        texts: dict[str, str] = {}
        for name in sorted(os.listdir(corpus_dir)):
            if name.endswith(".txt"):
                with open(os.path.join(corpus_dir, name), encoding="utf-8") as fh:
                    texts[name] = fh.read()
        if not texts:
            raise FileNotFoundError(f"no .txt descriptions under {corpus_dir!r}")
        self._texts = texts
        self._model = TfIdfModel.from_texts(texts)

    def search(self, query: WeightedQuery, top_k: int) -> list[str]:
        scores: dict[str, float] = {}
        for doc_id in self._model.doc_ids():
            score = sum(
                weight * self._model.tfidf(phrase, doc_id) for phrase, weight in query.terms
            )
            if score > 0.0:
                scores[doc_id] = score
        best = sorted(scores.items(), key=lambda kv: (-kv[1], kv[0]))[:top_k]
        return [self._texts[doc_id] for doc_id, _ in best]


def local_retrieval_search(corpus_dir: str, query: WeightedQuery, top_k: int) -> list[str]:
    """One-shot search over a description directory."""
    return LocalRetrievalClient(corpus_dir).search(query, top_k)


def _normalized(keywords: RankedKeywords) -> list[tuple[str, float]]:
    # Scores are non-negative, so scaling by the maximum maps onto [0, 1]
    # while preserving ratios and ties.  An all-zero list is left tied at 1.
    if not keywords:
        return []
    top = keywords[0][1]
    if top <= 0.0:
        return [(phrase, 1.0) for phrase, _ in keywords]
    return [(phrase, score / top) for phrase, score in keywords]


def combine_rankings(
    systems: Sequence[tuple[str, RankedKeywords]], weights: Mapping[str, float]
) -> RankedKeywords:
    """Accumulate weight * normalized score per keyword across systems.

    The output order is invariant to scaling all weights by the same
    positive constant.
    """
    combined: dict[str, float] = defaultdict(float)
    for name, keywords in systems:
        w = weights[name]
        if w <= 0.0:
            continue
        for phrase, norm in _normalized(keywords):
            combined[phrase] += w * norm
    return ranked(combined)


def aggregate_rerank(
    article: Document,
    systems: Sequence[tuple[str, RankedKeywords]],
    client: RetrievalClient,
    cfg: AggregationConfig | None = None,
) -> RankedKeywords:
    """Combine several keyword rankings into one, weighted by feedback.

    Per system: formulate a query, retrieve descriptions, weigh the
    system, then accumulate weight * normalized score per keyword.  If
    every system retrieved nothing, the combined score falls back to the
    unweighted mean of normalized scores.
    """
    if not systems:
        raise ValueError("at least one system is required")
    cfg = cfg or AggregationConfig()

    weights: dict[str, float] = {}
    for name, keywords in systems:
        if not keywords:
            weights[name] = 0.0
            continue
        query = formulate_query(keywords, cfg.max_query_terms)
        descriptions = client.search(query, cfg.top_k)
        weights[name] = system_weight(article, descriptions, cfg)

    if sum(weights.values()) <= 0.0:
        weights = {name: 1.0 / len(systems) for name, _ in systems}
    return combine_rankings(systems, weights)
