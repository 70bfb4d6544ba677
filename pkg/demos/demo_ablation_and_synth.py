#!/usr/bin/env python3
"""Measure how scores change with fewer references, on synthetic data.

Run from the repository root: python3 demos/demo_ablation_and_synth.py
"""

from deriveval import (
    ScorerKind,
    SynthConfig,
    evaluate_derivation,
    generate,
    reference_ablation,
)

# The synthetic generator builds reference sets plus predictions with known,
# seeded perturbations (dropped steps, relation edits, phrase noise), so
# expected score behaviour is known in advance.
config = SynthConfig(seed=7, n_instances=5, drop_step=0.5, phrase_noise=0.5)
references, predictions, manifest = generate(config)
print(f"Generated {len(references)} synthetic instances (seed={config.seed}).")

qid = sorted(references)[0]
pred = predictions[qid]
refs = references[qid]
print(f"{qid}: applied perturbations: {manifest[qid]['perturbations'] or 'none'}")

full = evaluate_derivation(pred, refs, ScorerKind.FULL)
print(f"\n{qid}: full-scorer F1 against all {len(refs.references)} references "
      f"= {full.f1:.4f}")

print("\nReference ablation (scores over the first k references):")
for k in range(1, len(refs.references) + 1):
    rep = reference_ablation(pred, refs, k)[ScorerKind.FULL]
    print(f"  k={k}: P={rep.precision:.4f} R={rep.recall:.4f} F1={rep.f1:.4f}")

print("\nWith policy='all-subsets-mean' the score is averaged over every")
print("size-k subset of references rather than just the leading prefix:")
rep = reference_ablation(pred, refs, 2, policy="all-subsets-mean")[ScorerKind.FULL]
print(f"  k=2 (all subsets): F1={rep.f1:.4f}")
