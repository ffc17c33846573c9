"""Shared text primitives.

Tokenization, rule-based sentence segmentation, n-gram distributions,
TF-IDF statistics over a document collection, and cosine similarity
between sentences.  Everything downstream (keyword extractors, the rank
aggregator, the summarizer) builds on these types.

All types are immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable, Mapping, Sequence

import numpy as np

_WORD_RE = re.compile(r"[^\W_]+", re.UNICODE)
_BOUNDARY_RE = re.compile(r"([.!?]+)(\s+|$)")
_ABBREV_TAIL_RE = re.compile(r"([A-Za-z][A-Za-z.]*)$")


def tokenize(text: str) -> list[str]:
    """Lowercase word tokens, split on non letter/digit boundaries.

    Punctuation is dropped; token order follows the text.  Empty input
    yields an empty list.
    """
    return _WORD_RE.findall(text.lower())


def light_stem(word: str) -> str:
    """Strip one common inflectional suffix (ing/ed/ly/s).

    Deliberately crude; used for clue-word matching and, behind a flag,
    for TF-IDF keyword scoring.
    """
    if len(word) > 5 and word.endswith("ing"):
        return word[:-3]
    if len(word) > 4 and word.endswith(("ed", "ly")):
        return word[:-2]
    if len(word) > 3 and word.endswith("s") and not word.endswith(("ss", "us", "is")):
        return word[:-1]
    return word


def _load_wordfile(path: str | None, bundled: str) -> frozenset[str]:
    if path is None:
        data = resources.files("osum.data").joinpath(bundled).read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            data = fh.read()
    words = set()
    for line in data.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    return frozenset(words)


@lru_cache(maxsize=None)
def load_stopwords(path: str | None = None) -> frozenset[str]:
    """Stopword set from a one-word-per-line file ('#' comments).

    With no path, returns the bundled Fox stoplist.
    """
    return _load_wordfile(path, "stopwords.txt")


@lru_cache(maxsize=None)
def load_abbreviations(path: str | None = None) -> frozenset[str]:
    """Abbreviations that protect a trailing period from sentence splits."""
    return _load_wordfile(path, "abbreviations.txt")


@dataclass(frozen=True)
class Sentence:
    """One sentence: 0-based position, raw text, lowercase tokens.

    The selection cost used by the optimizer is the word count.
    """

    index: int
    text: str
    tokens: tuple[str, ...]

    @property
    def cost(self) -> int:
        return len(self.tokens)


def _is_abbreviation(text: str, punct_start: int, abbreviations: frozenset[str]) -> bool:
    m = _ABBREV_TAIL_RE.search(text, 0, punct_start)
    if m is None:
        return False
    return m.group(1).lower().replace(".", "") in abbreviations


def split_sentences(text: str, abbreviations: Iterable[str] | None = None) -> list[Sentence]:
    """Rule-based splitter on '.', '!', '?' followed by whitespace or end.

    A bundled abbreviation list protects tokens like "mr." and "e.g."
    from triggering a split.  Segments that tokenize to nothing are
    dropped; surviving sentences are indexed 0..n-1 in order.
    """
    abbr = load_abbreviations() if abbreviations is None else frozenset(abbreviations)
    segments: list[str] = []
    start = 0
    for m in _BOUNDARY_RE.finditer(text):
        if m.group(1).endswith(".") and _is_abbreviation(text, m.start(1), abbr):
            continue
        seg = text[start:m.end(1)].strip()
        if seg:
            segments.append(seg)
        start = m.end()
    tail = text[start:].strip()
    if tail:
        segments.append(tail)

    sentences: list[Sentence] = []
    for seg in segments:
        toks = tokenize(seg)
        if toks:
            sentences.append(Sentence(index=len(sentences), text=seg, tokens=tuple(toks)))
    return sentences


@dataclass(frozen=True)
class Document:
    """A text unit: id, raw text, and its sentences in appearance order."""

    id: str
    raw: str
    sentences: tuple[Sentence, ...]

    @classmethod
    def from_text(
        cls, doc_id: str, text: str, abbreviations: Iterable[str] | None = None
    ) -> "Document":
        return cls(id=doc_id, raw=text, sentences=tuple(split_sentences(text, abbreviations)))

    def tokens(self) -> list[str]:
        out: list[str] = []
        for s in self.sentences:
            out.extend(s.tokens)
        return out

    def word_count(self) -> int:
        return sum(s.cost for s in self.sentences)


def ngrams(tokens: Sequence[str], n: int) -> list[str]:
    """Contiguous n-grams as space-joined strings, n in {1, 2}."""
    if n == 1:
        return list(tokens)
    if n == 2:
        return [f"{tokens[i]} {tokens[i + 1]}" for i in range(len(tokens) - 1)]
    raise ValueError(f"n must be 1 or 2, got {n}")


@dataclass(frozen=True)
class NGramDistribution:
    """Probability distribution over n-grams of one order.

    Probabilities sum to 1 within 1e-9; with smoothing every entry is
    strictly positive.
    """

    n: int
    probs: dict[str, float]


def ngram_distribution(
    tokens: Sequence[str],
    n: int,
    smoothing_eps: float = 1e-6,
    vocab: Iterable[str] | None = None,
) -> NGramDistribution:
    """Normalized n-gram counts with add-epsilon smoothing.

    The distribution is defined over the union of the observed n-grams
    and the caller-supplied vocabulary (so two distributions can share a
    support before computing a divergence).  Raises ValueError when the
    total mass is zero.
    """
    counts = Counter(ngrams(tokens, n))
    keys = set(counts)
    if vocab is not None:
        keys.update(vocab)
    total = sum(counts.values()) + smoothing_eps * len(keys)
    if total <= 0 or not keys:
        raise ValueError("empty distribution")
    probs: dict[str, float] = {}
    for key in keys:
        p = (counts.get(key, 0) + smoothing_eps) / total
        if p > 0:
            probs[key] = p
    return NGramDistribution(n=n, probs=probs)


class TfIdfModel:
    """Document-frequency statistics over a collection.

    Stores per-document token sequences so phrase frequencies (contiguous
    token runs) can be scored as well as unigrams.  The keyword score is

        (freq(P, D) / size(D)) * -log2(df(P) / N)

    which is 0 for terms that occur in every document.
    """

    def __init__(self, doc_tokens: Mapping[str, Sequence[str]]):
        if not doc_tokens:
            raise ValueError("model needs at least one document")
        self._doc_tokens: dict[str, tuple[str, ...]] = {
            doc_id: tuple(toks) for doc_id, toks in doc_tokens.items()
        }
        self.doc_count: int = len(self._doc_tokens)
        self._term_freq: dict[str, Counter] = {
            doc_id: Counter(toks) for doc_id, toks in self._doc_tokens.items()
        }
        self.doc_freq: Counter = Counter()
        for counter in self._term_freq.values():
            self.doc_freq.update(counter.keys())
        self._phrase_df_cache: dict[tuple[str, ...], int] = {}

    @classmethod
    def from_documents(cls, docs: Iterable[Document]) -> "TfIdfModel":
        return cls({doc.id: doc.tokens() for doc in docs})

    @classmethod
    def from_texts(cls, texts: Mapping[str, str]) -> "TfIdfModel":
        return cls({doc_id: tokenize(text) for doc_id, text in texts.items()})

    @classmethod
    def from_sentences(cls, doc: Document) -> "TfIdfModel":
        """Treat each sentence of one document as a pseudo-document."""
        return cls({f"{doc.id}#{s.index}": s.tokens for s in doc.sentences})

    def doc_ids(self) -> list[str]:
        return list(self._doc_tokens)

    def size(self, doc_id: str) -> int:
        return len(self._doc_tokens[doc_id])

    @staticmethod
    def _phrase_words(phrase: str) -> tuple[str, ...]:
        return tuple(phrase.lower().split())

    @staticmethod
    def _count_runs(haystack: tuple[str, ...], needle: tuple[str, ...]) -> int:
        k = len(needle)
        if k == 0 or k > len(haystack):
            return 0
        return sum(1 for i in range(len(haystack) - k + 1) if haystack[i : i + k] == needle)

    def tf(self, phrase: str, doc_id: str) -> int:
        words = self._phrase_words(phrase)
        if len(words) == 1:
            return self._term_freq[doc_id][words[0]]
        return self._count_runs(self._doc_tokens[doc_id], words)

    def df(self, phrase: str) -> int:
        words = self._phrase_words(phrase)
        if len(words) == 1:
            return self.doc_freq[words[0]]
        if words not in self._phrase_df_cache:
            self._phrase_df_cache[words] = sum(
                1 for toks in self._doc_tokens.values() if self._count_runs(toks, words) > 0
            )
        return self._phrase_df_cache[words]

    def idf(self, phrase: str) -> float:
        # Unknown terms are treated as if they occurred in one document.
        df = max(self.df(phrase), 1)
        return -math.log2(df / self.doc_count)

    def tfidf(self, phrase: str, doc_id: str) -> float:
        freq = self.tf(phrase, doc_id)
        if freq == 0:
            return 0.0
        size = self.size(doc_id)
        return (freq / size) * self.idf(phrase)


def _tfidf_vector(sentence: Sentence, model: TfIdfModel) -> dict[str, float]:
    counts = Counter(sentence.tokens)
    return {term: n * model.idf(term) for term, n in counts.items()}


def sentence_similarity(a: Sentence, b: Sentence, model: TfIdfModel) -> float:
    """Cosine of TF-IDF weighted term vectors, in [0, 1].

    Symmetric by construction; 0.0 when either vector is all zero.
    """
    va = _tfidf_vector(a, model)
    vb = _tfidf_vector(b, model)
    na = math.sqrt(sum(w * w for _, w in sorted(va.items())))
    nb = math.sqrt(sum(w * w for _, w in sorted(vb.items())))
    if na == 0.0 or nb == 0.0:
        return 0.0
    if va == vb:
        return 1.0
    dot = sum(va[t] * vb[t] for t in sorted(va.keys() & vb.keys()))
    return min(dot / (na * nb), 1.0)


def similarity_matrix(doc: Document, model: TfIdfModel | None = None) -> np.ndarray:
    """Symmetric pairwise sentence similarity matrix for one document.

    Without an explicit model, sentences are treated as pseudo-documents
    so the statistics stay local to the document.
    """
    if model is None:
        model = TfIdfModel.from_sentences(doc)
    n = len(doc.sentences)
    w = np.zeros((n, n))
    for i in range(n):
        for j in range(i, n):
            w[i, j] = w[j, i] = sentence_similarity(doc.sentences[i], doc.sentences[j], model)
    return w
