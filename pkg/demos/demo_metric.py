#!/usr/bin/env python3
"""Walk through scoring one predicted derivation against three references.

Run from the repository root: python3 demos/demo_metric.py
"""

from deriveval import (
    Derivation,
    DerivationStep,
    ReferenceSet,
    evaluate_all_scorers,
    phrase_similarity,
)

# A derivation is a set of <head, relation, tail> steps justifying an answer.
predicted = Derivation((
    DerivationStep("Big Stone Gap", "is directed by", "Adriana Trigiani"),
    DerivationStep("Adriana Trigiani", "lives in", "Greenwich Village"),
))

references = ReferenceSet("demo", (
    Derivation((
        DerivationStep("Big Stone Gap", "is directed by", "Adriana Trigiani"),
        DerivationStep("Adriana Trigiani", "is from", "Greenwich Village, New York City"),
    )),
    Derivation((
        DerivationStep("Adriana Trigiani", "directed", "Big Stone Gap"),
        DerivationStep("Adriana Trigiani", "is based in", "Greenwich Village"),
    )),
    Derivation((
        DerivationStep("Big Stone Gap", "was directed by", "Adriana Trigiani"),
    )),
))

print("Phrase similarity is normalized edit distance, e.g.:")
for a, b in [("is directed by", "was directed by"), ("lives in", "is from")]:
    print(f"  s({a!r}, {b!r}) = {phrase_similarity(a, b):.4f}")

print("\nScoring the prediction against all three references:")
for scorer, report in evaluate_all_scorers(predicted, references).items():
    print(f"  {scorer.value:8s} P={report.precision:.4f} R={report.recall:.4f} "
          f"F1={report.f1:.4f}  (best reference: #{report.winning_reference_index}, "
          f"soft-correct steps: {report.c_star:.3f})")

print("\nThe winning reference maximizes the best one-to-one step alignment;")
print("precision divides the soft count by |prediction|, recall by |reference|.")
