"""Seeded synthetic reference/prediction generation.

Used to exercise the metric's monotonicity: predictions are perturbed
copies of a reference, and the emitted manifest records which metric must
not increase under which perturbation. All randomness comes from the one
seed, so runs are reproducible byte for byte.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .model import Derivation, DerivationStep, ReferenceSet

_HEADS = [
    "Alder Creek", "Barton Hall", "Corvid Press", "Denham Reef", "Ellery Pond",
    "Foxglove Lane", "Gault Ridge", "Harrow Field", "Ivel Bridge", "Juniper Row",
]
_RELATIONS = [
    "is", "was", "is part of", "is located in", "was founded by",
    "is a member of", "is known for", "was built in",
]
_TAILS = [
    "a small village", "an annual festival", "the northern district",
    "a publishing house", "a limestone outcrop", "a disused station",
    "the county seat", "a nature reserve", "an early settlement",
]


@dataclass
class SynthConfig:
    seed: int
    n_instances: int = 10
    n_references: int = 3
    drop_step: float = 0.0
    relation_edit: float = 0.0
    phrase_noise: float = 0.0


def _random_step(rng: random.Random) -> DerivationStep:
    return DerivationStep(rng.choice(_HEADS), rng.choice(_RELATIONS), rng.choice(_TAILS))


def _random_derivation(rng: random.Random) -> Derivation:
    n = rng.choice([2, 2, 2, 3, 3, 4])  # mostly 2-3 steps
    return Derivation(tuple(_random_step(rng) for _ in range(n)))


def _noise_phrase(rng: random.Random, phrase: str) -> str:
    # single-character substitution keeps the phrase non-empty
    i = rng.randrange(len(phrase))
    replacement = rng.choice("abcdefghijklmnopqrstuvwxyz")
    return phrase[:i] + replacement + phrase[i + 1:]


def generate(config: SynthConfig) -> tuple[dict[str, ReferenceSet], dict[str, Derivation], dict]:
    """Return (references, predictions, manifest).

    Each prediction starts as a copy of the instance's first reference and
    is then perturbed per the configured probabilities. The manifest lists,
    per instance, the applied perturbations and the metric directions they
    force (e.g. a dropped step caps recall below 1).
    """
    rng = random.Random(config.seed)
    references: dict[str, ReferenceSet] = {}
    predictions: dict[str, Derivation] = {}
    manifest: dict = {}

    for i in range(config.n_instances):
        qid = f"synth-{i:04d}"
        refs = tuple(_random_derivation(rng) for _ in range(config.n_references))
        references[qid] = ReferenceSet(qid, refs)

        steps = list(refs[0].steps)
        applied = []
        if len(steps) > 1 and rng.random() < config.drop_step:
            steps.pop(rng.randrange(len(steps)))
            applied.append("drop-step")
        if rng.random() < config.relation_edit:
            j = rng.randrange(len(steps))
            s = steps[j]
            steps[j] = DerivationStep(s.head, _noise_phrase(rng, s.relation), s.tail, s.provenance)
            applied.append("relation-edit")
        if rng.random() < config.phrase_noise:
            j = rng.randrange(len(steps))
            s = steps[j]
            steps[j] = DerivationStep(_noise_phrase(rng, s.head), s.relation,
                                      _noise_phrase(rng, s.tail), s.provenance)
            applied.append("phrase-noise")
        predictions[qid] = Derivation(tuple(steps))

        expectations = {}
        if "drop-step" in applied:
            expectations["recall_vs_first_reference"] = "must not reach 1.0"
        if applied:
            expectations["f1"] = "must not exceed the unperturbed 1.0"
        manifest[qid] = {"perturbations": applied, "expectations": expectations}

    return references, predictions, manifest
