import math

import numpy as np
import pytest

from osum import (
    Document,
    ObjectiveConfig,
    VARIANTS,
    brute_force_opt,
    modified_greedy,
    objective_value,
    summarize,
)

from conftest import random_context

GREEDY_BOUND = 1.0 - 1.0 / math.sqrt(math.e)


def modular(values):
    return lambda s: sum(values[i] for i in s)


class TestModifiedGreedy:
    def test_zero_budget_returns_empty(self):
        trace = modified_greedy(modular([1.0, 2.0]), costs=[1, 1], budget=0)
        assert trace.selected == ()
        assert trace.value == 0.0

    def test_singleton_step_recovers_pathological_instance(self):
        # Two elements, f(a)=1 at cost 1 and f(b)=2 at cost 3, budget 3.
        # The ratio scan takes a and can no longer afford b; the final
        # singleton comparison returns {b} with the optimal value 2.
        f = modular([1.0, 2.0])
        trace = modified_greedy(f, costs=[1, 3], budget=3, r=1.0)
        assert trace.steps[0].candidate == 0 and trace.steps[0].accepted
        assert trace.steps[1].candidate == 1 and not trace.steps[1].accepted
        assert trace.singleton_override
        assert trace.selected == (1,)
        assert trace.value == 2.0
        best_set, best_value = brute_force_opt(f, costs=[1, 3], budget=3)
        assert (best_set, best_value) == (frozenset({1}), 2.0)

    def test_big_budget_takes_everything_monotone(self):
        rng = np.random.default_rng(41)
        ctx = random_context(rng, n=6)
        cfg = ObjectiveConfig(variant="a2", alpha=0.5)
        f = lambda s: objective_value(s, cfg, ctx)
        trace = modified_greedy(f, costs=[3] * 6, budget=1_000)
        assert sorted(trace.selected) == list(range(6))

    def test_ties_go_to_lower_index(self):
        trace = modified_greedy(modular([1.0, 1.0, 1.0]), costs=[2, 2, 2], budget=2)
        assert trace.steps[0].candidate == 0
        assert trace.selected == (0,)

    def test_deterministic(self):
        rng = np.random.default_rng(43)
        ctx = random_context(rng, n=7)
        cfg = ObjectiveConfig(variant="a5", alpha=0.25)
        f = lambda s: objective_value(s, cfg, ctx)
        costs = [int(c) for c in rng.integers(1, 9, size=7)]
        first = modified_greedy(f, costs, budget=12)
        second = modified_greedy(f, costs, budget=12)
        assert first == second

    def test_rejects_fractional_costs_below_one(self):
        with pytest.raises(ValueError):
            modified_greedy(modular([1.0]), costs=[0.5], budget=3)

    def test_feasibility_and_singleton_floor(self):
        rng = np.random.default_rng(47)
        for _ in range(30):
            n = int(rng.integers(2, 9))
            ctx = random_context(rng, n=n)
            cfg = ObjectiveConfig(variant=VARIANTS[int(rng.integers(5))], alpha=float(rng.random()))
            f = lambda s: objective_value(s, cfg, ctx)
            costs = [int(c) for c in rng.integers(1, 12, size=n)]
            budget = float(rng.integers(0, sum(costs) + 4))
            trace = modified_greedy(f, costs, budget)
            assert sum(costs[i] for i in trace.selected) <= budget
            assert trace.value == pytest.approx(f(frozenset(trace.selected)))
            singles = [f(frozenset([v])) for v in range(n) if costs[v] <= budget]
            if singles:
                assert trace.value >= max(singles) - 1e-12


class TestBruteForce:
    def test_zero_budget(self):
        f = modular([5.0, 1.0])
        assert brute_force_opt(f, costs=[1, 1], budget=0) == (frozenset(), 0.0)

    def test_modular_unit_costs_picks_top_k(self):
        f = modular([0.3, 0.9, 0.1, 0.7])
        best_set, best_value = brute_force_opt(f, costs=[1, 1, 1, 1], budget=2)
        assert best_set == {1, 3}
        assert best_value == pytest.approx(1.6)

    def test_tie_prefers_lexicographic_index_set(self):
        f = modular([1.0, 1.0, 1.0])
        best_set, _ = brute_force_opt(f, costs=[1, 1, 1], budget=1)
        assert best_set == {0}

    def test_size_guard(self):
        with pytest.raises(ValueError, match="too large"):
            brute_force_opt(modular([0.0] * 21), costs=[1] * 21, budget=1)

    def test_greedy_meets_bound_on_random_instances(self):
        rng = np.random.default_rng(53)
        for _ in range(20):
            n = int(rng.integers(3, 10))
            ctx = random_context(rng, n=n)
            cfg = ObjectiveConfig(variant=VARIANTS[int(rng.integers(5))], alpha=float(rng.random()))
            f = lambda s: objective_value(s, cfg, ctx)
            costs = [int(c) for c in rng.integers(1, 10, size=n)]
            budget = float(rng.integers(1, sum(costs) + 1))
            greedy = modified_greedy(f, costs, budget, r=1.0)
            _, optimum = brute_force_opt(f, costs, budget)
            if optimum > 0:
                assert greedy.value >= GREEDY_BOUND * optimum - 1e-12


class TestSummarize:
    REVIEW = (
        "The acting was excellent throughout the whole film. "
        "The plot dragged and felt boring in places. "
        "A lovely score carried the music forward. "
        "The ending was predictable but sincere."
    )

    def test_big_budget_returns_whole_document(self):
        doc = Document.from_text("r", self.REVIEW)
        summary = summarize(doc, ObjectiveConfig(budget=1_000))
        assert summary.indices == tuple(range(len(doc.sentences)))
        assert summary.text.startswith("The acting")

    def test_alpha_one_is_variant_independent(self):
        doc = Document.from_text("r", self.REVIEW)
        picks = {
            variant: summarize(doc, ObjectiveConfig(variant=variant, alpha=1.0, budget=18)).indices
            for variant in VARIANTS
        }
        assert len(set(picks.values())) == 1

    def test_budget_respected_and_document_order(self):
        doc = Document.from_text("r", self.REVIEW)
        summary = summarize(doc, ObjectiveConfig(budget=18))
        assert summary.word_count <= 18
        assert list(summary.indices) == sorted(summary.indices)

    def test_trace_records_objective(self):
        doc = Document.from_text("r", self.REVIEW)
        summary = summarize(doc, ObjectiveConfig(budget=18))
        assert summary.trace is not None
        assert summary.objective == pytest.approx(summary.trace.value)

    def test_sentence_less_document_yields_empty_summary(self):
        doc = Document.from_text("r", "!!! ???")
        summary = summarize(doc, ObjectiveConfig(budget=10))
        assert summary.indices == ()
        assert summary.text == ""

    def test_toy_review_meets_bound_against_oracle(self):
        text = (
            "The acting was excellent and warm. The plot dragged badly. "
            "A superb score lifted every scene. The ending felt predictable. "
            "Gorgeous visuals filled the screen. The dialogue was flat."
        )
        doc = Document.from_text("toy", text)
        assert len(doc.sentences) == 6
        from osum import SentimentLexicon, AspectOntology, build_context, objective_value

        cfg = ObjectiveConfig(variant="a4", alpha=0.5, r=1.0, budget=15)
        ctx = build_context(doc, SentimentLexicon.load(), AspectOntology.load())
        f = lambda s: objective_value(s, cfg, ctx)
        summary = summarize(doc, cfg)
        _, optimum = brute_force_opt(f, [s.cost for s in doc.sentences], cfg.budget)
        assert summary.objective >= GREEDY_BOUND * optimum - 1e-12

    def test_character_cost_mode(self):
        doc = Document.from_text("r", self.REVIEW)
        char_budget = 120
        summary = summarize(doc, ObjectiveConfig(budget=char_budget), cost_mode="chars")
        assert sum(len(s.text) for s in summary.sentences) <= char_budget
        with pytest.raises(ValueError):
            summarize(doc, ObjectiveConfig(budget=10), cost_mode="letters")
