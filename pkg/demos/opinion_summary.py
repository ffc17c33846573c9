"""Summarize the bundled movie review at several trade-off settings.

alpha weighs document coverage against subjective aspect coverage:
alpha=1 is pure relevance, alpha=0 pure subjectivity.

    python demos/opinion_summary.py
"""

from importlib import resources

from osum import Document, ObjectiveConfig, summarize


def main():
    review = resources.files("osum.data").joinpath("default_review.txt").read_text("utf-8")
    doc = Document.from_text("review", review)
    print(f"review: {len(doc.sentences)} sentences, {doc.word_count()} words")

    for alpha in (0.0, 0.5, 1.0):
        cfg = ObjectiveConfig(variant="a5", alpha=alpha, r=1.0, budget=80)
        summary = summarize(doc, cfg)
        print(f"\n== alpha = {alpha} ({summary.word_count} words) ==")
        print(summary.text)

    # The trace shows each greedy round: candidate, gain, scaled ratio.
    cfg = ObjectiveConfig(variant="a2", alpha=0.5, budget=60)
    summary = summarize(doc, cfg)
    print("\n== greedy trace at alpha = 0.5, function a2 ==")
    for step in summary.trace.steps[:8]:
        mark = "+" if step.accepted else "-"
        print(f"  {mark} sentence {step.candidate:2d}  gain {step.gain:8.4f}  "
              f"ratio {step.ratio:8.5f}")
    print(f"  objective value: {summary.objective:.4f}")


if __name__ == "__main__":
    main()
