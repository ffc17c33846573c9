"""Walk through the three keyword extractors on a small corpus.

Run from the repository root:

    python demos/keyword_extraction.py
"""

from osum import Document, TfIdfModel, rake_keywords, textrank_keywords, tfidf_keywords

ABSTRACT = (
    "Compatibility of systems of linear constraints over the set of natural numbers. "
    "Criteria of compatibility of a system of linear Diophantine equations, strict "
    "inequations, and nonstrict inequations are considered. Upper bounds for components "
    "of a minimal set of solutions and algorithms of construction of minimal generating "
    "sets of solutions for all types of systems are given. These criteria and the "
    "corresponding algorithms for constructing a minimal supporting set of solutions can "
    "be used in solving all the considered types of systems and systems of mixed types."
)

OTHER_DOCS = {
    "solar": "Solar panels convert sunlight into electricity for homes and cars.",
    "hybrid": "Hybrid cars combine a petrol engine with an electric motor.",
    "wind": "Wind turbines generate power on coastal wind farms.",
}


def show(title, keywords, limit=8):
    print(f"\n== {title} ==")
    for phrase, score in keywords[:limit]:
        print(f"  {score:7.3f}  {phrase}")


def main():
    doc = Document.from_text("abstract", ABSTRACT)

    # RAKE: stopword-delimited candidate phrases scored by degree/frequency.
    show("RAKE", rake_keywords(doc))

    # TextRank: co-occurrence graph, weighted PageRank, merged keyphrases.
    show("TextRank", textrank_keywords(doc))

    # TF-IDF needs document-frequency statistics from a collection.
    corpus = {name: text for name, text in OTHER_DOCS.items()}
    corpus["abstract"] = ABSTRACT
    model = TfIdfModel.from_texts(corpus)
    show("TF-IDF (against a 4-document collection)", tfidf_keywords(doc, model, k=8))


if __name__ == "__main__":
    main()
