"""Acceptance suite: one test per release criterion, each printing a
pass/fail line (run with -s to see them).  Tolerances are pinned here
and nowhere else."""

import contextlib
import math
import time

import numpy as np
import pytest

from osum import (
    AspectOntology,
    Document,
    NGramDistribution,
    ObjectiveConfig,
    ObjectiveContext,
    SentimentLexicon,
    VARIANTS,
    brute_force_opt,
    coverage,
    diversity_reward,
    evaluate_corpus,
    kl_divergence,
    marginal_gain,
    modified_greedy,
    nb_sentiment,
    objective_value,
    pearson,
    rake_keywords,
    rouge_n,
    subjective_coverage,
    summarize,
    train_nb,
)
from osum.evaluation import SWEEP_COLUMNS, lexicon_sentiment

from conftest import (
    RAKE_ABSTRACT,
    all_subset_values,
    monotone_violations,
    random_context,
    submodular_violations,
)

GREEDY_BOUND = 1.0 - 1.0 / math.sqrt(math.e)


@contextlib.contextmanager
def criterion(name: str):
    try:
        yield
    except BaseException:
        print(f"[FAIL] {name}")
        raise
    print(f"[PASS] {name}")


def suite_instances(count: int = 100, n: int = 6):
    """The shared instance stream for the structural criteria."""
    rng = np.random.default_rng(2024)
    for trial in range(count):
        yield trial, random_context(rng, n=n, n_aspects=int(rng.integers(1, 4)))


def test_rake_golden_example():
    with criterion("RAKE golden example: top-4 phrases and scores within 0.1, under 1s"):
        start = time.perf_counter()
        doc = Document.from_text("abstract", RAKE_ABSTRACT)
        top4 = rake_keywords(doc)[:4]
        elapsed = time.perf_counter() - start
        expected = [
            ("minimal generating sets", 8.7),
            ("linear diophantine equations", 8.5),
            ("minimal supporting set", 7.7),
            ("minimal set", 4.7),
        ]
        assert [p for p, _ in top4] == [p for p, _ in expected]
        for (_, got), (_, want) in zip(top4, expected):
            assert got == pytest.approx(want, abs=0.1)
        assert elapsed < 1.0


def test_monotonicity_and_submodularity_suite():
    name = (
        "Structural suite: zero monotonicity/submodularity violations over all "
        "subset triples of 100 random 6-sentence instances, under 30s"
    )
    with criterion(name):
        start = time.perf_counter()
        checked = 0
        for trial, ctx in suite_instances():
            fns = {
                "coverage": lambda s: coverage(s, ctx, 0.4),
                "diversity": lambda s: diversity_reward(s, ctx),
            }
            for v in VARIANTS:
                fns[v] = (lambda vv: lambda s: subjective_coverage(s, ctx, vv))(v)
            variant = VARIANTS[trial % 5]
            for alpha in (0.0, 0.25, 0.5, 1.0):
                cfg = ObjectiveConfig(variant=variant, alpha=alpha)
                fns[f"combined@{alpha}"] = (
                    lambda c: lambda s: objective_value(s, c, ctx)
                )(cfg)
            for label, fn in fns.items():
                values = all_subset_values(fn, 6)
                assert monotone_violations(values, 6) == 0, (trial, label)
                assert submodular_violations(values, 6) == 0, (trial, label)
                checked += 1
        elapsed = time.perf_counter() - start
        assert checked == 100 * 11
        assert elapsed < 30.0


def test_greedy_approximation_bound():
    name = (
        "Greedy bound: value >= (1 - 1/sqrt(e)) * optimum on 200 random instances "
        "of up to 12 sentences, under 2min"
    )
    with criterion(name):
        start = time.perf_counter()
        rng = np.random.default_rng(101)
        ratios = []
        for trial in range(200):
            n = int(rng.integers(2, 13))
            ctx = random_context(rng, n=n, n_aspects=int(rng.integers(1, 4)))
            cfg = ObjectiveConfig(variant=VARIANTS[trial % 5], alpha=float(rng.random()))
            f = lambda s: objective_value(s, cfg, ctx)
            costs = [int(c) for c in rng.integers(1, 13, size=n)]
            budget = float(rng.integers(min(costs), sum(costs) + 1))
            greedy = modified_greedy(f, costs, budget, r=1.0)
            _, optimum = brute_force_opt(f, costs, budget)
            assert optimum > 0.0
            assert greedy.value >= GREEDY_BOUND * optimum - 1e-12
            ratios.append(greedy.value / optimum)
        elapsed = time.perf_counter() - start
        mean_ratio = float(np.mean(ratios))
        print(f"  empirical mean greedy/optimal ratio: {mean_ratio:.4f} over 200 instances")
        assert mean_ratio > 0.9
        assert elapsed < 120.0


def test_pathological_instance_recovered_by_singleton_step():
    name = (
        "Pathological two-element instance: ratio scan alone reaches value 1, "
        "the singleton comparison restores the optimum 2 (exact)"
    )
    with criterion(name):
        f = lambda s: (1.0 if 0 in s else 0.0) + (2.0 if 1 in s else 0.0)
        trace = modified_greedy(f, costs=[1, 3], budget=3, r=1.0)
        sequential = [step.candidate for step in trace.steps if step.accepted]
        assert sequential == [0]
        assert f(frozenset(sequential)) == 1.0
        assert trace.singleton_override
        assert trace.selected == (1,)
        assert trace.value == 2.0
        assert brute_force_opt(f, [1, 3], 3) == (frozenset({1}), 2.0)


def test_diversity_worked_case():
    name = (
        "Diversity worked case: rewards 4/9 share a cluster, 4 sits alone; with the "
        "first chosen, the next greedy pick under the diversity reward alone is the "
        "lone-cluster element because sqrt(13) < 2 + 2 (exact)"
    )
    with criterion(name):
        ctx = ObjectiveContext(
            similarity=np.diag([12.0, 27.0, 12.0]),
            subjectivity=[0.0, 0.0, 0.0],
            positive=[True, True, True],
            aspect_of=["p1", "p1", "p2"],
            aspect_weight={"p1": 1.0, "p2": 1.0},
            aspect_budget={"p1": 1.0, "p2": 1.0},
        )
        assert list(ctx.singleton_rewards) == [4.0, 9.0, 4.0]
        base = diversity_reward({0}, ctx)
        gains = {
            k: diversity_reward({0, k}, ctx) - base for k in (1, 2)
        }
        assert math.sqrt(13.0) < 2.0 + 2.0
        assert gains[2] > gains[1]
        assert max(gains, key=lambda k: gains[k]) == 2


def _tradeoff_corpus(rng):
    lexicon = SentimentLexicon.from_pairs(
        {
            "glowing": (0.9, 0.0),
            "wretched": (0.0, 0.9),
            "blipa": (0.08, 0.0),
            "blipb": (0.0, 0.08),
        }
    )
    topics = [f"topic{i}" for i in range(40)]
    fillers = ["loved", "hated", "overall", "verdict", "stands", "remains", "felt", "truly"]
    docs = []
    for d in range(12):
        positive = d % 2 == 0
        k = 1 + d % 3  # planted sentiment tokens per subjective sentence
        core = [f"core{d}w", f"core{d}x", f"core{d}y", f"core{d}z"]
        sentences = []
        for _ in range(8):  # objective: shared core + topics, faint random blips
            words = core + [topics[int(i)] for i in rng.choice(40, size=5, replace=False)]
            if rng.random() < 0.6:
                words.append("blipa" if rng.random() < 0.5 else "blipb")
            sentences.append(" ".join(words) + ".")
        planted = "glowing" if positive else "wretched"
        for j in range(2):  # subjective: 4 words, k of them planted
            pad = [fillers[(d + j + i) % len(fillers)] for i in range(4 - k)]
            sentences.append(" ".join([planted] * k + pad) + ".")
        order = list(rng.permutation(len(sentences)))
        docs.append(Document.from_text(f"doc{d}", " ".join(sentences[i] for i in order)))
    return docs, lexicon


def test_tradeoff_direction():
    name = (
        "Trade-off direction on a 12-document planted corpus: between the alpha=0 and "
        "alpha=1 endpoints (r=0), sentiment correlation never rises and ROUGE-1 F never "
        "falls, for every variant, under 2min"
    )
    with criterion(name):
        start = time.perf_counter()
        docs, lexicon = _tradeoff_corpus(np.random.default_rng(202))
        references = {d.id: d.raw for d in docs}
        ontology = AspectOntology.load()
        sentiment = lexicon_sentiment(lexicon)
        for variant in VARIANTS:
            endpoint = {}
            for alpha in (0.0, 0.5, 1.0):
                cfg = ObjectiveConfig(variant=variant, alpha=alpha, r=0.0, budget=12)
                report = evaluate_corpus(
                    docs,
                    references,
                    lambda doc, c=cfg: summarize(doc, c, lexicon, ontology),
                    sentiment,
                )
                endpoint[alpha] = report
            assert endpoint[0.0]["corr"] >= endpoint[1.0]["corr"], variant
            assert endpoint[1.0]["rouge1"] >= endpoint[0.0]["rouge1"], variant
        elapsed = time.perf_counter() - start
        assert elapsed < 120.0


def test_marginal_gain_matches_two_full_evaluations():
    name = (
        "Oracle equality: marginal gain equals the difference of two from-scratch "
        "objective evaluations within 1e-9 on 50 random instances"
    )
    with criterion(name):
        rng = np.random.default_rng(303)
        for trial in range(50):
            n = int(rng.integers(2, 9))
            ctx = random_context(rng, n=n)
            cfg = ObjectiveConfig(variant=VARIANTS[trial % 5], alpha=float(rng.random()))
            selected = {int(i) for i in rng.choice(n, size=int(rng.integers(0, n)), replace=False)}
            outside = [i for i in range(n) if i not in selected]
            if not outside:
                continue
            candidate = int(rng.choice(outside))
            scratch = objective_value(selected | {candidate}, cfg, ctx) - objective_value(
                selected, cfg, ctx
            )
            assert marginal_gain(selected, candidate, cfg, ctx) == pytest.approx(
                scratch, abs=1e-9
            )


def test_reference_unit_values():
    name = (
        "Reference unit values: ROUGE F 0.5714, KL 0.1438, NB posterior 0.692, "
        "Pearson -1.0, each at its stated tolerance"
    )
    with criterion(name):
        assert rouge_n(["a", "b", "c", "d"], ["a", "b", "x"], 1).f1 == pytest.approx(
            0.5714, abs=1e-4
        )
        p = NGramDistribution(1, {"a": 0.5, "b": 0.5})
        q = NGramDistribution(1, {"a": 0.25, "b": 0.75})
        assert kl_divergence(p, q) == pytest.approx(0.1438, abs=1e-4)
        model = train_nb([("good good", "pos"), ("bad", "neg")], use_bigrams=False)
        assert nb_sentiment(model, "good") == pytest.approx(0.692, abs=1e-3)
        assert pearson([1.0, 2.0, 3.0], [3.0, 2.0, 1.0]) == pytest.approx(-1.0, abs=1e-12)


def test_dominance_chains():
    name = (
        "Dominance chains: a2 <= a3 <= 2*a2 and a4 <= a5 <= 2*a4 over every subset "
        "of every instance in the structural suite"
    )
    with criterion(name):
        for trial, ctx in suite_instances():
            tables = {
                v: all_subset_values(lambda s, vv=v: subjective_coverage(s, ctx, vv), 6)
                for v in ("a2", "a3", "a4", "a5")
            }
            for m in range(1 << 6):
                a2, a3 = tables["a2"][m], tables["a3"][m]
                a4, a5 = tables["a4"][m], tables["a5"][m]
                assert a2 - 1e-9 <= a3 <= 2 * a2 + 1e-9, (trial, m)
                assert a4 - 1e-9 <= a5 <= 2 * a4 + 1e-9, (trial, m)


def test_evaluation_report_schema():
    name = (
        "Report schema: the sweep CSV carries trade-off, scaling factor, variant, "
        "ROUGE-1, ROUGE-2 and sentiment correlation columns (absolute benchmark "
        "figures are out of scope)"
    )
    with criterion(name):
        assert SWEEP_COLUMNS == ("alpha", "r", "variant", "rouge1", "rouge2", "corr")
        docs = [
            Document.from_text("d0", "Fine acting here. Plain filler words."),
            Document.from_text("d1", "Boring plot there. Other filler words."),
        ]
        refs = {d.id: d.raw for d in docs}
        from osum import sweep_evaluate

        rows = sweep_evaluate(
            docs,
            refs,
            SentimentLexicon.load(),
            AspectOntology.load(),
            sentiment_of=lambda t: float(len(t)),
            budget=6,
            alphas=(0.0, 1.0),
            rs=(0.0,),
            variants=("a1",),
        )
        assert all(set(row) == set(SWEEP_COLUMNS) for row in rows)
