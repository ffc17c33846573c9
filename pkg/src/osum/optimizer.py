"""Budgeted maximization of a monotone set function.

The workhorse is a modified greedy: scan the ground set once, each round
adding the element with the best gain-to-scaled-cost ratio if it fits the
budget and does not hurt the objective, then compare the result against
the best affordable singleton and keep the better of the two.  For a
monotone submodular objective and unit cost exponent this achieves at
least a (1 - 1/sqrt(e)) fraction of the optimum.

A small exhaustive optimizer is included as a testing oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Sequence

from .objectives import ObjectiveConfig, build_context, objective_value
from .opinion import AspectOntology, SentimentLexicon
from .text import Document, Sentence, TfIdfModel

SetFunction = Callable[[frozenset[int]], float]


@dataclass(frozen=True)
class GreedyStep:
    """One round of the sequential scan."""

    candidate: int
    gain: float
    ratio: float
    accepted: bool


@dataclass(frozen=True)
class GreedyTrace:
    """Everything the greedy did: per-round picks and the final answer.

    ``selected`` lists accepted indices in pick order; ``value`` is the
    objective of the final set (after the singleton comparison, which
    ``singleton_override`` records).
    """

    steps: tuple[GreedyStep, ...]
    selected: tuple[int, ...]
    value: float
    singleton_override: bool


def modified_greedy(
    objective: SetFunction,
    costs: Sequence[float],
    budget: float,
    r: float = 1.0,
) -> GreedyTrace:
    """Budgeted greedy with cost scaling and a singleton fallback.

    Each round picks k maximizing (f(G + k) - f(G)) / cost_k**r over the
    remaining elements (ties to the lower index), accepts it only when
    the budget allows and the gain is non-negative, and removes it from
    consideration either way.  Afterwards the best affordable singleton
    replaces the set if it scores strictly higher.
    """
    n = len(costs)
    if any(c < 1 for c in costs):
        raise ValueError("costs must be >= 1")
    if budget < 0:
        raise ValueError("budget must be >= 0")

    chosen: list[int] = []
    chosen_set: frozenset[int] = frozenset()
    spent = 0.0
    current = objective(chosen_set)
    remaining = list(range(n))
    steps: list[GreedyStep] = []

    while remaining:
        best_k = best_gain = best_ratio = None
        for k in remaining:
            gain = objective(chosen_set | {k}) - current
            ratio = gain / (costs[k] ** r)
            if best_ratio is None or ratio > best_ratio:
                best_k, best_gain, best_ratio = k, gain, ratio
        accepted = spent + costs[best_k] <= budget and best_gain >= 0.0
        steps.append(GreedyStep(best_k, best_gain, best_ratio, accepted))
        if accepted:
            chosen.append(best_k)
            chosen_set = chosen_set | {best_k}
            spent += costs[best_k]
            current += best_gain
        remaining.remove(best_k)

    best_single = None
    best_single_value = None
    for v in range(n):
        if costs[v] <= budget:
            value = objective(frozenset([v]))
            if best_single_value is None or value > best_single_value:
                best_single, best_single_value = v, value

    if best_single is not None and best_single_value > current:
        return GreedyTrace(
            steps=tuple(steps),
            selected=(best_single,),
            value=best_single_value,
            singleton_override=True,
        )
    return GreedyTrace(
        steps=tuple(steps), selected=tuple(chosen), value=current, singleton_override=False
    )


def brute_force_opt(
    objective: SetFunction, costs: Sequence[float], budget: float
) -> tuple[frozenset[int], float]:
    """Exhaustive optimum over all feasible subsets (testing oracle).

    Limited to 20 elements.  Ties go to the lexicographically smallest
    index set.
    """
    n = len(costs)
    if n > 20:
        raise ValueError("instance too large for oracle")
    best_set = frozenset()
    best_value = objective(best_set)
    best_key: tuple[int, ...] = ()
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            if sum(costs[i] for i in combo) > budget:
                continue
            value = objective(frozenset(combo))
            if value > best_value or (value == best_value and combo < best_key):
                best_set, best_value, best_key = frozenset(combo), value, combo
    return best_set, best_value


@dataclass(frozen=True)
class Summary:
    """Selected sentences in document order, plus the optimizer's trace."""

    sentences: tuple[Sentence, ...]
    indices: tuple[int, ...]
    objective: float | None = None
    trace: GreedyTrace | None = None

    @property
    def text(self) -> str:
        return " ".join(s.text for s in self.sentences)

    @property
    def word_count(self) -> int:
        return sum(s.cost for s in self.sentences)


def pick_sentences(doc: Document, indices: Sequence[int]) -> tuple[Sentence, ...]:
    ordered = sorted(set(indices))
    return tuple(doc.sentences[i] for i in ordered)


def summarize(
    doc: Document,
    cfg: ObjectiveConfig | None = None,
    lexicon: SentimentLexicon | None = None,
    ontology: AspectOntology | None = None,
    model: TfIdfModel | None = None,
    truncate_depth: int | None = 2,
    cost_mode: str = "words",
) -> Summary:
    """Budgeted opinion summary of one document.

    Builds the objective context (similarity, sentiment, aspects), runs
    the modified greedy under the budget, and returns the selected
    sentences in their original order.  Costs are word counts by
    default; cost_mode="chars" charges raw character counts instead (the
    budget is then characters too).
    """
    cfg = cfg or ObjectiveConfig()
    if not doc.sentences:
        empty = GreedyTrace(steps=(), selected=(), value=0.0, singleton_override=False)
        return Summary(sentences=(), indices=(), objective=0.0, trace=empty)
    if cost_mode not in ("words", "chars"):
        raise ValueError(f"unknown cost_mode {cost_mode!r}")
    lexicon = lexicon or SentimentLexicon.load()
    ontology = ontology or AspectOntology.load()
    ctx = build_context(
        doc, lexicon, ontology, model=model, lambda0=cfg.lambda0, truncate_depth=truncate_depth
    )
    if cost_mode == "chars":
        costs = [max(len(s.text), 1) for s in doc.sentences]
    else:
        costs = [s.cost for s in doc.sentences]
    trace = modified_greedy(
        lambda s: objective_value(s, cfg, ctx), costs, cfg.budget, cfg.r
    )
    return Summary(
        sentences=pick_sentences(doc, trace.selected),
        indices=tuple(sorted(trace.selected)),
        objective=trace.value,
        trace=trace,
    )
