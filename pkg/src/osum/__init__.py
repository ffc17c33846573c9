"""Opinion summarization by budgeted submodular maximization, plus
keyword extraction and retrieval-weighted rank aggregation."""

from .aggregate import (
    AggregationConfig,
    BIGRAM_OVERLAP,
    KL_MIXED,
    KL_UNI,
    LocalRetrievalClient,
    WeightedQuery,
    aggregate_rerank,
    formulate_query,
    kl_divergence,
    local_retrieval_search,
    system_weight,
)
from .baselines import (
    baseline_lerman_sm,
    baseline_mincut,
    baseline_textrank,
    baseline_top,
    baseline_top_subj,
    mincut_subjective,
)
from .evaluation import (
    NBModel,
    RougeScore,
    evaluate_corpus,
    nb_sentiment,
    pearson,
    rouge_n,
    sweep_evaluate,
    train_nb,
    write_sweep_csv,
)
from .keywords import (
    RankedKeywords,
    rake_keywords,
    ranked,
    textrank_keywords,
    tfidf_keywords,
    weighted_pagerank,
)
from .objectives import (
    ObjectiveConfig,
    ObjectiveContext,
    VARIANTS,
    build_context,
    coverage,
    diversity_reward,
    marginal_gain,
    objective_value,
    subjective_coverage,
)
from .opinion import (
    AspectAssignment,
    AspectOntology,
    SentimentLexicon,
    assign_aspects,
    polarity_score,
    subjectivity_score,
)
from .optimizer import (
    GreedyStep,
    GreedyTrace,
    Summary,
    brute_force_opt,
    modified_greedy,
    summarize,
)
from .text import (
    Document,
    NGramDistribution,
    Sentence,
    TfIdfModel,
    load_stopwords,
    ngram_distribution,
    sentence_similarity,
    similarity_matrix,
    split_sentences,
    tokenize,
)

__version__ = "0.1.0"

__all__ = [
    "AggregationConfig",
    "AspectAssignment",
    "AspectOntology",
    "BIGRAM_OVERLAP",
    "Document",
    "GreedyStep",
    "GreedyTrace",
    "KL_MIXED",
    "KL_UNI",
    "LocalRetrievalClient",
    "NBModel",
    "NGramDistribution",
    "ObjectiveConfig",
    "ObjectiveContext",
    "RankedKeywords",
    "RougeScore",
    "Sentence",
    "SentimentLexicon",
    "Summary",
    "TfIdfModel",
    "VARIANTS",
    "WeightedQuery",
    "aggregate_rerank",
    "assign_aspects",
    "baseline_lerman_sm",
    "baseline_mincut",
    "baseline_textrank",
    "baseline_top",
    "baseline_top_subj",
    "brute_force_opt",
    "build_context",
    "coverage",
    "diversity_reward",
    "evaluate_corpus",
    "formulate_query",
    "kl_divergence",
    "load_stopwords",
    "local_retrieval_search",
    "marginal_gain",
    "mincut_subjective",
    "modified_greedy",
    "nb_sentiment",
    "ngram_distribution",
    "objective_value",
    "pearson",
    "polarity_score",
    "rake_keywords",
    "ranked",
    "rouge_n",
    "sentence_similarity",
    "similarity_matrix",
    "split_sentences",
    "subjective_coverage",
    "subjectivity_score",
    "summarize",
    "sweep_evaluate",
    "system_weight",
    "textrank_keywords",
    "tfidf_keywords",
    "tokenize",
    "train_nb",
    "weighted_pagerank",
    "write_sweep_csv",
]
