"""Monotone submodular objectives for opinion summarization.

Building blocks:

* coverage: saturated similarity of the summary to the whole document,
  sum_i min(c_i(S), gamma * c_i(V)) with c_i(S) = sum_{j in S} w_ij.
* diversity_reward: sum over clusters of sqrt(sum of singleton rewards
  of the selected members), rewarding picks from untouched clusters.
* subjective_coverage: five variants trading aspect coverage against
  sentence subjectivity:
    a1  weighted sum of subjectivity per aspect (modular),
    a2  per-aspect sum capped at the aspect budget (budget-additive),
    a3  like a2 but capped separately per polarity,
    a4  per-aspect maximum subjectivity (facility location),
    a5  like a4 but maximized separately per polarity.
* objective_value: the combined trade-off, alpha * coverage +
  (1 - alpha) * subjective_coverage, or an experimental three-term form
  with an explicit diversity weight.

All functions are monotone non-decreasing and submodular in the
selected set, which is what the greedy optimizer's guarantee needs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .opinion import (
    AspectOntology,
    SentimentLexicon,
    assign_aspects,
    polarity_score,
    subjectivity_score,
)
from .text import Document, TfIdfModel, similarity_matrix

VARIANTS = ("a1", "a2", "a3", "a4", "a5")


@dataclass(frozen=True)
class ObjectiveConfig:
    """Which objective to run and how to weigh its parts.

    Two-term mode (default) combines coverage and subjective coverage as
    alpha and 1 - alpha.  Setting beta_r switches to the experimental
    three-term mode alpha * coverage + beta_r * diversity + gamma_b *
    subjective coverage.
    """

    variant: str = "a4"
    alpha: float = 0.5
    gamma_sat: float = 0.25
    lambda0: float = 1.0
    r: float = 1.0
    budget: int = 200
    beta_r: float | None = None
    gamma_b: float | None = None
    weight_facility: bool = False

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError("alpha must lie in [0, 1]")
        if not 0.0 < self.gamma_sat <= 1.0:
            raise ValueError("gamma_sat must lie in (0, 1]")
        if self.r < 0:
            raise ValueError("r must be >= 0")
        if self.budget < 0:
            raise ValueError("budget must be >= 0")
        if (self.beta_r is None) != (self.gamma_b is None):
            raise ValueError("three-term mode needs both beta_r and gamma_b")


class ObjectiveContext:
    """Immutable per-document state shared by all objective evaluations.

    Holds the similarity matrix, its column sums, singleton rewards,
    per-sentence subjectivity and polarity sign, the aspect partition,
    and per-aspect weights and budgets.
    """

    def __init__(
        self,
        similarity: np.ndarray,
        subjectivity: Sequence[float],
        positive: Sequence[bool],
        aspect_of: Sequence[str],
        aspect_weight: Mapping[str, float],
        aspect_budget: Mapping[str, float],
    ):
        w = np.asarray(similarity, dtype=float)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise ValueError("similarity must be square")
        if (w < 0).any():
            raise ValueError("similarity entries must be non-negative")
        if not np.array_equal(w, w.T):
            raise ValueError("similarity must be symmetric")
        n = w.shape[0]
        if not (len(subjectivity) == len(positive) == len(aspect_of) == n):
            raise ValueError("per-sentence arrays must match the matrix size")
        self.w = w
        self.n = n
        self.col_sums = w.sum(axis=1)
        self.singleton_rewards = self.col_sums / n if n else self.col_sums
        self.subjectivity = np.asarray(subjectivity, dtype=float)
        if (self.subjectivity < 0).any():
            raise ValueError("subjectivity scores must be non-negative")
        self.positive = np.asarray(positive, dtype=bool)
        self.aspect_of = tuple(aspect_of)
        self.aspect_weight = dict(aspect_weight)
        self.aspect_budget = dict(aspect_budget)
        members: dict[str, list[int]] = {name: [] for name in self.aspect_weight}
        for idx, name in enumerate(self.aspect_of):
            if name not in members:
                raise ValueError(f"aspect {name!r} missing weight/budget")
            members[name].append(idx)
        self.partition: dict[str, tuple[int, ...]] = {
            name: tuple(idx) for name, idx in members.items()
        }


def build_context(
    doc: Document,
    lexicon: SentimentLexicon,
    ontology: AspectOntology,
    model: TfIdfModel | None = None,
    lambda0: float = 1.0,
    truncate_depth: int | None = 2,
) -> ObjectiveContext:
    """Assemble the evaluation context for one document."""
    assignment = assign_aspects(doc, ontology, lambda0=lambda0, truncate_depth=truncate_depth)
    return ObjectiveContext(
        similarity=similarity_matrix(doc, model),
        subjectivity=[subjectivity_score(s, lexicon) for s in doc.sentences],
        positive=[polarity_score(s, lexicon) > 0.0 for s in doc.sentences],
        aspect_of=assignment.aspect_of,
        aspect_weight=assignment.weight,
        aspect_budget=assignment.budget,
    )


def coverage(selected: Iterable[int], ctx: ObjectiveContext, gamma: float) -> float:
    """Saturated document coverage of the selected set."""
    idx = sorted(set(selected))
    if not idx:
        return 0.0
    c_s = ctx.w[:, idx].sum(axis=1)
    return float(np.minimum(c_s, gamma * ctx.col_sums).sum())


def diversity_reward(
    selected: Iterable[int],
    ctx: ObjectiveContext,
    partition: Mapping[str, Sequence[int]] | None = None,
) -> float:
    """Square-root-of-cluster-sums reward over singleton rewards."""
    chosen = set(selected)
    if not chosen:
        return 0.0
    parts = partition if partition is not None else ctx.partition
    total = 0.0
    for members in parts.values():
        inside = sum(ctx.singleton_rewards[j] for j in members if j in chosen)
        total += math.sqrt(inside)
    return total


def subjective_coverage(
    selected: Iterable[int],
    ctx: ObjectiveContext,
    variant: str,
    weight_facility: bool = False,
) -> float:
    """Evaluate one of the five subjective aspect-coverage variants.

    The facility-location variants (a4, a5) carry no aspect weight
    unless weight_facility is set.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    chosen = set(selected)
    total = 0.0
    for name, members in ctx.partition.items():
        inside = [j for j in members if j in chosen]
        w_i = ctx.aspect_weight[name]
        lam_i = ctx.aspect_budget[name]
        s = ctx.subjectivity
        if variant == "a1":
            total += w_i * sum(s[j] for j in inside)
        elif variant == "a2":
            total += w_i * min(sum(s[j] for j in inside), lam_i)
        elif variant == "a3":
            pos_sum = sum(s[j] for j in inside if ctx.positive[j])
            neg_sum = sum(s[j] for j in inside if not ctx.positive[j])
            total += w_i * (min(pos_sum, lam_i) + min(neg_sum, lam_i))
        elif variant == "a4":
            best = max((s[j] for j in inside), default=0.0)
            total += (w_i if weight_facility else 1.0) * best
        else:  # a5
            best_pos = max((s[j] for j in inside if ctx.positive[j]), default=0.0)
            best_neg = max((s[j] for j in inside if not ctx.positive[j]), default=0.0)
            total += (w_i if weight_facility else 1.0) * (best_pos + best_neg)
    return float(total)


def objective_value(
    selected: Iterable[int], cfg: ObjectiveConfig, ctx: ObjectiveContext
) -> float:
    """The combined summary objective for a selected sentence set."""
    chosen = frozenset(selected)
    cov = coverage(chosen, ctx, cfg.gamma_sat)
    subj = subjective_coverage(chosen, ctx, cfg.variant, cfg.weight_facility)
    if cfg.beta_r is None:
        return cfg.alpha * cov + (1.0 - cfg.alpha) * subj
    div = diversity_reward(chosen, ctx)
    return cfg.alpha * cov + cfg.beta_r * div + cfg.gamma_b * subj


def marginal_gain(
    selected: Iterable[int], candidate: int, cfg: ObjectiveConfig, ctx: ObjectiveContext
) -> float:
    """objective_value(S + candidate) - objective_value(S)."""
    chosen = frozenset(selected)
    if candidate in chosen:
        raise ValueError(f"candidate {candidate} already selected")
    return objective_value(chosen | {candidate}, cfg, ctx) - objective_value(chosen, cfg, ctx)
