import numpy as np
import pytest

from osum import Document, ObjectiveContext, SentimentLexicon

# The classic worked example for keyword extraction by word degree/frequency.
RAKE_ABSTRACT = (
    "Compatibility of systems of linear constraints over the set of natural numbers. "
    "Criteria of compatibility of a system of linear Diophantine equations, strict "
    "inequations, and nonstrict inequations are considered. Upper bounds for components "
    "of a minimal set of solutions and algorithms of construction of minimal generating "
    "sets of solutions for all types of systems are given. These criteria and the "
    "corresponding algorithms for constructing a minimal supporting set of solutions can "
    "be used in solving all the considered types of systems and systems of mixed types."
)


@pytest.fixture
def abstract_doc() -> Document:
    return Document.from_text("abstract", RAKE_ABSTRACT)


@pytest.fixture
def toy_lexicon() -> SentimentLexicon:
    return SentimentLexicon.from_pairs({"good": (0.75, 0.0), "bad": (0.0, 0.625)})


def random_context(rng: np.random.Generator, n: int = 6, n_aspects: int = 2) -> ObjectiveContext:
    """Random but valid objective context for property tests."""
    a = rng.random((n, n))
    w = (a + a.T) / 2.0
    np.fill_diagonal(w, 1.0)
    aspects = [f"asp{k}" for k in range(n_aspects)]
    return ObjectiveContext(
        similarity=w,
        subjectivity=rng.random(n) * 2.0,
        positive=rng.random(n) < 0.5,
        aspect_of=[aspects[int(rng.integers(n_aspects))] for _ in range(n)],
        aspect_weight={name: float(rng.uniform(0.3, 1.0)) for name in aspects},
        aspect_budget={name: float(rng.uniform(0.3, 1.5)) for name in aspects},
    )


def mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def all_subset_values(fn, n: int) -> list[float]:
    """fn evaluated on every subset of range(n), indexed by bitmask."""
    return [fn(mask_to_set(m)) for m in range(1 << n)]


def monotone_violations(values: list[float], n: int, tol: float = 1e-9) -> int:
    bad = 0
    for mask in range(1 << n):
        for i in range(n):
            if not mask >> i & 1 and values[mask | 1 << i] < values[mask] - tol:
                bad += 1
    return bad


def submodular_violations(values: list[float], n: int, tol: float = 1e-9) -> int:
    """Diminishing-returns violations over all (A, B, x) with A <= B, x not in B."""
    bad = 0
    full = (1 << n) - 1
    for x in range(n):
        xbit = 1 << x
        rest = full & ~xbit
        b = rest
        while True:
            gain_b = values[b | xbit] - values[b]
            a = b
            while True:
                gain_a = values[a | xbit] - values[a]
                if gain_a < gain_b - tol:
                    bad += 1
                if a == 0:
                    break
                a = (a - 1) & b
            if b == 0:
                break
            b = (b - 1) & rest
    return bad
