"""Sentiment lexicon scoring and aspect-ontology partitioning.

A sentence's subjectivity is the sum of positive and negative lexicon
scores of its words; its polarity is their difference, and the sign of
the polarity splits sentences into positive and negative partitions.
Sentences are also assigned to aspects of a domain ontology by clue-word
matching, with aspect weights and budgets decaying with tree depth.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Mapping

from .text import Document, Sentence, light_stem


@dataclass(frozen=True)
class SentimentLexicon:
    """Word-level sentiment scores, each in [0, 1].

    Lookup of an absent word yields (0, 0).  Sense-level duplicates in
    the source file are averaged at load time.
    """

    entries: Mapping[str, tuple[float, float]]

    def lookup(self, word: str) -> tuple[float, float]:
        return self.entries.get(word, (0.0, 0.0))

    def __contains__(self, word: str) -> bool:
        return word in self.entries

    @classmethod
    def from_pairs(cls, pairs: Mapping[str, tuple[float, float]]) -> "SentimentLexicon":
        for word, (pos, neg) in pairs.items():
            if not (0.0 <= pos <= 1.0 and 0.0 <= neg <= 1.0):
                raise ValueError(f"scores for {word!r} must lie in [0, 1]")
        return cls(entries=dict(pairs))

    @classmethod
    def load(cls, path: str | None = None) -> "SentimentLexicon":
        """Parse a TSV of word<TAB>pos<TAB>neg ('#' comments allowed)."""
        if path is None:
            data = resources.files("osum.data").joinpath("lexicon.tsv").read_text("utf-8")
        else:
            with open(path, encoding="utf-8") as fh:
                data = fh.read()
        sums: dict[str, list[float]] = {}
        for lineno, line in enumerate(data.splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise ValueError(f"lexicon line {lineno}: expected word<TAB>pos<TAB>neg")
            word, pos_s, neg_s = parts
            pos, neg = float(pos_s), float(neg_s)
            if not (0.0 <= pos <= 1.0 and 0.0 <= neg <= 1.0):
                raise ValueError(f"lexicon line {lineno}: scores must lie in [0, 1]")
            acc = sums.setdefault(word.lower(), [0.0, 0.0, 0.0])
            acc[0] += pos
            acc[1] += neg
            acc[2] += 1.0
        entries = {w: (p / n, ng / n) for w, (p, ng, n) in sums.items()}
        return cls(entries=entries)


def subjectivity_score(sentence: Sentence, lexicon: SentimentLexicon) -> float:
    """Sum of (pos + neg) over the sentence's words; always >= 0."""
    return sum(sum(lexicon.lookup(tok)) for tok in sentence.tokens)


def polarity_score(sentence: Sentence, lexicon: SentimentLexicon) -> float:
    """Sum of (pos - neg); a score <= 0 lands in the negative partition."""
    total = 0.0
    for tok in sentence.tokens:
        pos, neg = lexicon.lookup(tok)
        total += pos - neg
    return total


@dataclass(frozen=True)
class Aspect:
    name: str
    parent: str | None
    depth: int  # root = 1
    clues: frozenset[str]


class AspectOntology:
    """Aspect tree with clue words; names must be unique."""

    def __init__(self, aspects: Mapping[str, Aspect], root: str):
        self.aspects = dict(aspects)
        self.root = root
        for aspect in self.aspects.values():
            if aspect.parent is not None:
                parent = self.aspects.get(aspect.parent)
                if parent is None or aspect.depth != parent.depth + 1:
                    raise ValueError(f"inconsistent depth for aspect {aspect.name!r}")

    @classmethod
    def from_json(cls, obj: dict) -> "AspectOntology":
        aspects: dict[str, Aspect] = {}

        def walk(node: dict, parent: str | None, depth: int) -> None:
            name = node["name"]
            if name in aspects:
                raise ValueError(f"duplicate aspect name {name!r}")
            clues = frozenset(c.lower() for c in node.get("clues", []))
            aspects[name] = Aspect(name=name, parent=parent, depth=depth, clues=clues)
            for child in node.get("children", []):
                walk(child, name, depth + 1)

        walk(obj, None, 1)
        return cls(aspects, root=obj["name"])

    @classmethod
    def load(cls, path: str | None = None) -> "AspectOntology":
        if path is None:
            data = resources.files("osum.data").joinpath("movie_ontology.json").read_text("utf-8")
        else:
            with open(path, encoding="utf-8") as fh:
                data = fh.read()
        return cls.from_json(json.loads(data))

    def truncated(self, max_depth: int = 2) -> "AspectOntology":
        """Fold aspects deeper than max_depth into their shallow ancestor.

        The folded aspect keeps its own clues plus those of its deeper
        descendants.
        """
        kept: dict[str, Aspect] = {
            name: a for name, a in self.aspects.items() if a.depth <= max_depth
        }
        extra_clues: dict[str, set[str]] = {name: set(a.clues) for name, a in kept.items()}
        for aspect in self.aspects.values():
            if aspect.depth <= max_depth:
                continue
            anc = aspect
            while anc.depth > max_depth:
                anc = self.aspects[anc.parent]  # type: ignore[index]
            extra_clues[anc.name].update(aspect.clues)
        rebuilt = {
            name: Aspect(name=name, parent=a.parent, depth=a.depth,
                         clues=frozenset(extra_clues[name]))
            for name, a in kept.items()
        }
        return AspectOntology(rebuilt, root=self.root)


@dataclass(frozen=True)
class AspectAssignment:
    """Partition of a document's sentences over ontology aspects.

    Every sentence maps to exactly one aspect; per-aspect weight is
    1/depth and per-aspect budget is lambda0/depth.
    """

    aspect_of: tuple[str, ...]
    weight: Mapping[str, float]
    budget: Mapping[str, float]

    def partition(self) -> dict[str, list[int]]:
        parts: dict[str, list[int]] = {name: [] for name in self.weight}
        for idx, name in enumerate(self.aspect_of):
            parts[name].append(idx)
        return parts


def _clue_hits(sentence: Sentence, clues: frozenset[str], stemmed: frozenset[str]) -> int:
    hits = 0
    for tok in sentence.tokens:
        if tok in clues or light_stem(tok) in stemmed:
            hits += 1
    return hits


def assign_aspects(
    doc: Document,
    ontology: AspectOntology,
    lambda0: float = 1.0,
    truncate_depth: int | None = 2,
) -> AspectAssignment:
    """Assign each sentence to the aspect with the most clue-word hits.

    Matching is case-insensitive on lightly stemmed tokens.  Ties go to
    the shallower aspect, then to the lexicographically smaller name;
    sentences matching nothing fall back to the root aspect.  By default
    the ontology is folded to its first two levels first.
    """
    if truncate_depth is not None:
        ontology = ontology.truncated(truncate_depth)
    if not ontology.aspects:
        raise ValueError("ontology has no aspects")

    stemmed = {
        name: frozenset(light_stem(c) for c in aspect.clues)
        for name, aspect in ontology.aspects.items()
    }
    order = sorted(ontology.aspects.values(), key=lambda a: (a.depth, a.name))

    assigned: list[str] = []
    for sentence in doc.sentences:
        best_name = ontology.root
        best_hits = 0
        for aspect in order:
            hits = _clue_hits(sentence, aspect.clues, stemmed[aspect.name])
            if hits > best_hits:
                best_name, best_hits = aspect.name, hits
        assigned.append(best_name)

    weight = {name: 1.0 / a.depth for name, a in ontology.aspects.items()}
    budget = {name: lambda0 / a.depth for name, a in ontology.aspects.items()}
    return AspectAssignment(aspect_of=tuple(assigned), weight=weight, budget=budget)
