"""Step scorers and per-derivation precision/recall/F1 against multiple
golden references, plus the multi-reference ablation procedure.

A prediction D is scored against each golden derivation G_i by the best
one-to-one step alignment; the winning reference G* maximizes that score.
Precision divides by |D|, recall by |G*|.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

from . import textsim
from .align import Alignment, best_alignment
from .errors import BadK, EmptyDerivation, EmptyReferenceSet
from .model import Derivation, DerivationStep, ReferenceSet

PhraseSimilarity = Callable[[str, str], float]


class ScorerKind(str, Enum):
    """Which step fields feed the similarity: both entities, the relation
    only, or all three averaged."""

    ENTITY = "entity"
    RELATION = "relation"
    FULL = "full"


SCORER_ORDER = (ScorerKind.ENTITY, ScorerKind.RELATION, ScorerKind.FULL)


@dataclass(frozen=True)
class MetricReport:
    precision: float
    recall: float
    f1: float
    c_star: float
    winning_reference_index: int
    winning_alignment: Alignment | None


def f1_score(precision: float, recall: float) -> float:
    """Harmonic mean; 0 when both components are 0 (the formula is 0/0 there)."""
    if precision + recall == 0.0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def step_similarity(
    d: DerivationStep,
    g: DerivationStep,
    scorer: ScorerKind,
    similarity: PhraseSimilarity = textsim.phrase_similarity,
) -> float:
    """Similarity of two steps under the selected scorer, in [0, 1]."""
    if scorer is ScorerKind.ENTITY:
        return 0.5 * (similarity(d.head, g.head) + similarity(d.tail, g.tail))
    if scorer is ScorerKind.RELATION:
        return similarity(d.relation, g.relation)
    return (
        similarity(d.head, g.head)
        + similarity(d.relation, g.relation)
        + similarity(d.tail, g.tail)
    ) / 3.0


def score_matrix(
    prediction: Derivation,
    reference: Derivation,
    scorer: ScorerKind,
    similarity: PhraseSimilarity = textsim.phrase_similarity,
) -> np.ndarray:
    matrix = np.empty((len(prediction), len(reference)))
    for i, d in enumerate(prediction):
        for j, g in enumerate(reference):
            matrix[i, j] = step_similarity(d, g, scorer, similarity)
    return matrix


def score_against_reference(
    prediction: Derivation,
    reference: Derivation,
    scorer: ScorerKind,
    similarity: PhraseSimilarity = textsim.phrase_similarity,
) -> tuple[float, Alignment]:
    """Best alignment score of the prediction against one golden derivation:
    a soft count of correct steps in [0, min(|D|, |G|)]."""
    alignment, score = best_alignment(score_matrix(prediction, reference, scorer, similarity))
    return score, alignment


def evaluate_derivation(
    prediction: Derivation,
    refs: ReferenceSet,
    scorer: ScorerKind,
    similarity: PhraseSimilarity = textsim.phrase_similarity,
    gstar_policy: str = "score",
) -> MetricReport:
    """Score a prediction against every reference and report P/R/F1 for the
    winning one.

    gstar_policy "score" (default) picks the reference maximizing the
    alignment score, breaking ties by higher resulting F1 and then lowest
    reference index; "f1" maximizes F1 directly, ties to lowest index.
    """
    if len(prediction) == 0:
        raise EmptyDerivation("precision is undefined for an empty prediction")
    if len(refs) == 0:
        raise EmptyReferenceSet(refs.question_id)
    if gstar_policy not in ("score", "f1"):
        raise ValueError(f"unknown gstar policy: {gstar_policy!r}")

    best = None
    for index, reference in enumerate(refs.references):
        c, alignment = score_against_reference(prediction, reference, scorer, similarity)
        pr = c / len(prediction)
        rc = c / len(reference)
        f1 = f1_score(pr, rc)
        if gstar_policy == "score":
            key = (c, f1, -index)
        else:
            key = (f1, -index)
        if best is None or key > best[0]:
            best = (key, MetricReport(pr, rc, f1, c, index, alignment))
    return best[1]


def evaluate_all_scorers(
    prediction: Derivation,
    refs: ReferenceSet,
    similarity: PhraseSimilarity = textsim.phrase_similarity,
    gstar_policy: str = "score",
) -> dict[ScorerKind, MetricReport]:
    """Run evaluate_derivation per scorer; the winning reference is selected
    independently for each."""
    return {
        scorer: evaluate_derivation(prediction, refs, scorer, similarity, gstar_policy)
        for scorer in SCORER_ORDER
    }


def reference_ablation(
    prediction: Derivation,
    refs: ReferenceSet,
    k: int,
    policy: str = "prefix",
    similarity: PhraseSimilarity = textsim.phrase_similarity,
) -> dict[ScorerKind, MetricReport]:
    """Evaluate against restricted reference sets of size k.

    policy "prefix" keeps the first k references; "all-subsets-mean"
    averages report values over every k-subset (the aggregate report
    carries no single winning reference or alignment).
    """
    if not 1 <= k <= len(refs):
        raise BadK(f"k={k} outside 1..{len(refs)}")
    if policy == "prefix":
        subset = ReferenceSet(refs.question_id, refs.references[:k])
        return evaluate_all_scorers(prediction, subset, similarity)
    if policy != "all-subsets-mean":
        raise ValueError(f"unknown ablation policy: {policy!r}")

    per_scorer: dict[ScorerKind, list[MetricReport]] = {s: [] for s in SCORER_ORDER}
    for combo in itertools.combinations(refs.references, k):
        subset = ReferenceSet(refs.question_id, combo)
        for scorer, report in evaluate_all_scorers(prediction, subset, similarity).items():
            per_scorer[scorer].append(report)
    out = {}
    for scorer, reports in per_scorer.items():
        n = len(reports)
        out[scorer] = MetricReport(
            precision=sum(r.precision for r in reports) / n,
            recall=sum(r.recall for r in reports) / n,
            f1=sum(r.f1 for r in reports) / n,
            c_star=sum(r.c_star for r in reports) / n,
            winning_reference_index=-1,
            winning_alignment=None,
        )
    return out
