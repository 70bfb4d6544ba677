#!/usr/bin/env python3
"""Run the annotation-filtering pipeline and rater-agreement measures.

Uses the test fixtures as input data.
Run from the repository root: python3 demos/demo_pipeline.py
"""

from pathlib import Path

from deriveval import (
    agreement_report,
    filter_by_answerability,
    filter_submissions,
    krippendorff_alpha,
    load_judgements,
    majority_vote,
    load_submissions,
)

data = Path(__file__).resolve().parent.parent / "tests" / "data"

submissions = load_submissions(data / "submissions.json")
print(f"Loaded {len(submissions)} raw submissions.")

kept, stats = filter_submissions(submissions)
print("Filter pipeline (wrong/neither answers dropped, then only questions")
print("with exactly three valid derivations are retained):")
print(f"  dropped wrong-answer submissions   : {stats.dropped_wrong}")
print(f"  dropped neither-answer submissions : {stats.dropped_neither}")
print(f"  questions dropped (not exactly 3)  : {stats.dropped_not_three}")
print(f"  questions retained                 : {stats.retained_questions}")

judgements = load_judgements(data / "judgements.json")
by_question = {}
for j in judgements:
    by_question.setdefault(j.question_id, []).append(j)
votes = {qid: majority_vote(js) for qid, js in by_question.items()}
kept2 = filter_by_answerability(kept, votes)
print("\nAnswerability vote (strict majority of Yes/Likely/No, else Split):")
print(f"  votes: {votes}")
print(f"  kept after Yes-majority filter: {sorted(kept2)}")

report = agreement_report(judgements)
print(f"\nKrippendorff's alpha (nominal): {report.alpha:.4f}")
print(f"Label distribution (Split counted): {report.label_distribution}")
print(f"Split fraction: {report.split_fraction:.4f}")

# Alpha can also be computed directly from a ratings matrix
# (rows = units, columns = raters, None = missing).
ratings = [
    ["Yes", "Yes", "Yes"],
    ["Yes", "No", None],
    ["No", "No", "Likely"],
    ["Likely", "Likely", "Likely"],
]
print(f"\nAlpha for a hand-made ratings matrix: {krippendorff_alpha(ratings):.4f}")
