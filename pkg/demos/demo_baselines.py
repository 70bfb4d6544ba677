#!/usr/bin/env python3
"""Generate heuristic baseline derivations from dependency parses and score them.

Uses the test fixtures as input data.
Run from the repository root: python3 demos/demo_baselines.py
"""

from pathlib import Path

from deriveval import (
    baseline_core,
    baseline_ie,
    evaluate_corpus,
    load_annotation_corpus,
    load_derivations,
    load_instances,
)

data = Path(__file__).resolve().parent.parent / "tests" / "data"

instances = {inst.question_id: inst for inst in load_instances(data / "instances.json")}
references = load_derivations(data / "references.json", instances=instances)
corpus = load_annotation_corpus(data / "parses.conll")
shared = corpus.get(None, {})

predictions = {}
for inst in instances.values():
    annotations = {**shared, **corpus.get(inst.question_id, {})}
    predictions[inst.question_id] = baseline_ie(inst, annotations)

first = next(iter(instances.values()))
print(f"Exhaustive-IE baseline for {first.question_id!r}:")
for step in predictions[first.question_id]:
    print(f"  <{step.head} | {step.relation} | {step.tail}>")

ann = {**shared, **corpus.get(first.question_id, {})}
core = baseline_core(first, ann)
print(f"\nRoot-verb (Core) baseline for {first.question_id!r}:")
for step in core:
    print(f"  <{step.head} | {step.relation} | {step.tail}>")

report = evaluate_corpus(predictions, references)
print("\nCorpus scores for the IE baseline (macro-averaged):")
print(report.to_tsv(), end="")
