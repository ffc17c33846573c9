"""Keyword extractors: TF-IDF scoring, RAKE, and TextRank.

Each extractor returns a ranked list of (phrase, score) pairs with
non-increasing scores, unique phrases, and lexicographic tie-breaking.
"""

from __future__ import annotations

import math
import re
from collections import Counter, defaultdict
from typing import Iterable, Mapping

from .text import Document, TfIdfModel, light_stem, load_stopwords

RankedKeywords = list[tuple[str, float]]

_PHRASE_DELIM_RE = re.compile(r"[^\w\s]")
_WORD_RE = re.compile(r"[^\W_]+", re.UNICODE)


def ranked(scores: Mapping[str, float]) -> RankedKeywords:
    """Sort phrase scores: highest first, ties broken lexicographically."""
    return sorted(scores.items(), key=lambda kv: (-kv[1], kv[0]))


def weighted_pagerank(
    vertices: Iterable,
    edge_weights: Mapping[tuple, float],
    damping: float = 0.85,
    max_iter: int = 100,
    tol: float = 1e-6,
    initial: Mapping | None = None,
) -> dict:
    """Weighted PageRank on an undirected graph.

    Edge keys are unordered vertex pairs with positive weights.  Every
    score starts at 1.0 and iterates

        WS(i) = (1 - d) + d * sum_j w_ji / out(j) * WS(j)

    until the largest change drops below tol.  Isolated vertices settle
    at 1 - d.  The fixed point is unique for 0 < d < 1, so the converged
    ranking does not depend on the initial scores.
    """
    if not (0.0 < damping < 1.0):
        raise ValueError("damping must be in (0, 1)")
    verts = set(vertices)
    neighbors: dict = defaultdict(list)
    out_weight: dict = defaultdict(float)
    for (a, b), w in edge_weights.items():
        if w <= 0 or a == b:
            continue
        neighbors[a].append((b, w))
        neighbors[b].append((a, w))
        out_weight[a] += w
        out_weight[b] += w

    scores = {v: 1.0 for v in verts} if initial is None else {v: initial[v] for v in verts}
    for _ in range(max_iter):
        delta = 0.0
        new_scores = {}
        for v in verts:
            rank = sum(w / out_weight[u] * scores[u] for u, w in neighbors[v])
            new_scores[v] = (1.0 - damping) + damping * rank
            delta = max(delta, abs(new_scores[v] - scores[v]))
        scores = new_scores
        if delta < tol:
            break
    return scores


def tfidf_keywords(
    doc: Document,
    model: TfIdfModel,
    k: int,
    stopwords: Iterable[str] | None = None,
    stem: bool = False,
) -> RankedKeywords:
    """Top-k unigram keywords by (freq/size) * -log2(df/N).

    The document must be registered in the model under its id.  A term
    that occurs in every document scores 0.  With ``stem`` on, surface
    forms sharing a light stem are merged (scores summed, the
    lexicographically first surface form is kept).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    stop = load_stopwords() if stopwords is None else frozenset(stopwords)
    terms = {t for t in doc.tokens() if t not in stop}
    scores = {t: model.tfidf(t, doc.id) for t in terms}
    if stem:
        merged: dict[str, float] = {}
        surface: dict[str, str] = {}
        for term in sorted(scores):
            s = light_stem(term)
            merged[s] = merged.get(s, 0.0) + scores[term]
            surface.setdefault(s, term)
        scores = {surface[s]: v for s, v in merged.items()}
    return ranked(scores)[:k]


def _rake_candidates(
    text: str, stoplist: frozenset[str]
) -> tuple[list[tuple[str, ...]], list[list[tuple[str, bool]]]]:
    """Candidate phrases plus the flagged token runs of each fragment.

    Fragments are the stretches between phrase delimiters (any
    punctuation); candidates are the maximal stopword-free token runs
    inside a fragment.
    """
    candidates: list[tuple[str, ...]] = []
    fragments: list[list[tuple[str, bool]]] = []
    for frag in _PHRASE_DELIM_RE.split(text.lower()):
        words = _WORD_RE.findall(frag)
        if not words:
            continue
        flagged = [(w, w in stoplist) for w in words]
        fragments.append(flagged)
        run: list[str] = []
        for word, is_stop in flagged:
            if is_stop:
                if run:
                    candidates.append(tuple(run))
                    run = []
            else:
                run.append(word)
        if run:
            candidates.append(tuple(run))
    return candidates, fragments


def rake_keywords(
    doc: Document,
    stoplist: Iterable[str] | None = None,
    phrase_delims: str | None = None,
) -> RankedKeywords:
    """RAKE keyword extraction.

    Word score is deg(w)/freq(w) where deg(w) sums the lengths of the
    candidates containing w; a candidate scores the sum of its member
    word scores.  Phrases containing stopwords are admitted only when
    the exact word sequence occurs at least twice in the same order.
    """
    stop = load_stopwords() if stoplist is None else frozenset(stoplist)
    if not stop:
        raise ValueError("stoplist must be non-empty")
    text = doc.raw
    if phrase_delims:
        text = re.sub("[" + re.escape(phrase_delims) + "]", ".", text)
    candidates, fragments = _rake_candidates(text, stop)
    if not candidates:
        return []

    freq: Counter = Counter()
    deg: Counter = Counter()
    for cand in candidates:
        for word in cand:
            freq[word] += 1
            deg[word] += len(cand)
    word_score = {w: deg[w] / freq[w] for w in freq}

    # Adjoining rule: two candidate runs joined by interior stopwords,
    # promoted when the exact combined sequence repeats.
    combos: Counter = Counter()
    for flagged in fragments:
        spans: list[tuple[int, int]] = []
        start = None
        for i, (_, is_stop) in enumerate(flagged):
            if is_stop:
                if start is not None:
                    spans.append((start, i))
                    start = None
            elif start is None:
                start = i
        if start is not None:
            spans.append((start, len(flagged)))
        for (s1, _), (_, e2) in zip(spans, spans[1:]):
            combos[tuple(w for w, _ in flagged[s1:e2])] += 1

    scores: dict[str, float] = {}
    for cand in candidates:
        scores[" ".join(cand)] = sum(word_score[w] for w in cand)
    for combo, count in combos.items():
        if count >= 2:
            scores[" ".join(combo)] = sum(word_score.get(w, 0.0) for w in combo)
    return ranked(scores)


def textrank_keywords(
    doc: Document,
    window: int = 2,
    damping: float = 0.85,
    top_fraction: float = 1 / 3,
    max_iter: int = 100,
    tol: float = 1e-6,
    stopwords: Iterable[str] | None = None,
) -> RankedKeywords:
    """Graph-ranked keywords via weighted PageRank over co-occurrences.

    Vertices are non-stopword unigrams; an undirected edge joins two
    words that co-occur within ``window`` positions in a sentence, its
    weight counting the co-occurrences.  Scores start at 1.0 and iterate

        WS(i) = (1 - d) + d * sum_j w_ji / out(j) * WS(j)

    until the largest change drops below ``tol``.  The top third of
    vertices (by default) are kept, and kept words adjacent in the text
    merge into multi-word keyphrases scored by the sum of their parts.
    """
    if not (0.0 < damping < 1.0):
        raise ValueError("damping must be in (0, 1)")
    if window < 2:
        raise ValueError("window must be >= 2")
    stop = load_stopwords() if stopwords is None else frozenset(stopwords)

    vertices: set[str] = set()
    weights: dict[tuple[str, str], float] = defaultdict(float)
    for sent in doc.sentences:
        toks = sent.tokens
        for i, w1 in enumerate(toks):
            if w1 in stop:
                continue
            vertices.add(w1)
            for j in range(i + 1, min(i + window, len(toks))):
                w2 = toks[j]
                if w2 in stop or w2 == w1:
                    continue
                key = (w1, w2) if w1 < w2 else (w2, w1)
                weights[key] += 1.0
    if not vertices:
        return []

    scores = weighted_pagerank(vertices, weights, damping, max_iter, tol)

    keep_n = math.ceil(top_fraction * len(vertices))
    kept = {v for v, _ in sorted(scores.items(), key=lambda kv: (-kv[1], kv[0]))[:keep_n]}

    phrases: dict[str, float] = {}
    for sent in doc.sentences:
        run: list[str] = []
        for tok in sent.tokens:
            if tok in kept and (not run or run[-1] != tok):
                run.append(tok)
            else:
                if run:
                    phrases[" ".join(run)] = sum(scores[w] for w in run)
                run = [tok] if tok in kept else []
        if run:
            phrases[" ".join(run)] = sum(scores[w] for w in run)
    return ranked(phrases)
