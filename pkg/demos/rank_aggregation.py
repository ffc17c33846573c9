"""Combine extractor rankings with retrieval feedback.

Each extractor's keywords become a weighted query against a directory of
description texts; systems whose retrieved descriptions look like the
article get more say in the combined ranking.

    python demos/rank_aggregation.py
"""

import os
import tempfile

from osum import (
    AggregationConfig,
    Document,
    KL_UNI,
    LocalRetrievalClient,
    TfIdfModel,
    aggregate_rerank,
    formulate_query,
    rake_keywords,
    textrank_keywords,
    tfidf_keywords,
)

ARTICLE = (
    "Ford will unveil a solar powered concept car this month. The C-MAX Solar "
    "Energi uses a concentrator that acts like a magnifying glass to charge its "
    "roof mounted solar panels. By using solar power instead of a plug, the "
    "company says a typical owner cuts annual emissions by four tonnes. Ford "
    "sold about 85,000 hybrid or electric vehicles last year, including 6,300 "
    "units of the C-MAX Energi plug-in hybrid."
)

DESCRIPTIONS = {
    "plant.txt": "Workers build the C-MAX hybrid on the assembly line at the "
                 "Michigan plant, powered in part by a large solar energy array.",
    "showroom.txt": "A Ford C-MAX hybrid electric vehicle in a dealer showroom.",
    "storm.txt": "A tropical storm approaches the gulf coast on Tuesday.",
    "recipe.txt": "A plate of roasted vegetables with olive oil and thyme.",
}


def main():
    doc = Document.from_text("article", ARTICLE)

    with tempfile.TemporaryDirectory() as corpus_dir:
        for name, text in DESCRIPTIONS.items():
            with open(os.path.join(corpus_dir, name), "w", encoding="utf-8") as fh:
                fh.write(text)

        model = TfIdfModel.from_texts({**DESCRIPTIONS, "article": ARTICLE})
        systems = [
            ("tfidf", tfidf_keywords(doc, model, k=8)),
            ("rake", rake_keywords(doc)[:8]),
            ("textrank", textrank_keywords(doc)[:8]),
        ]
        for name, keywords in systems:
            query = formulate_query(keywords, max_terms=3)
            print(f"{name:>9} query: {query.serialize()}")

        client = LocalRetrievalClient(corpus_dir)
        combined = aggregate_rerank(
            doc, systems, client, AggregationConfig(weight_method=KL_UNI)
        )
        print("\ncombined ranking:")
        for phrase, score in combined[:10]:
            print(f"  {score:7.3f}  {phrase}")
        print("\nfinal query:", formulate_query(combined, max_terms=4).serialize())


if __name__ == "__main__":
    main()
