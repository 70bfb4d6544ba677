"""Domain types: derivation steps, derivations, reference sets, instances,
and the raw annotation records flowing through the filter pipeline.

All types are immutable after validation and safe to share between threads.
"""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass, field

from .errors import (
    EmptyDerivation,
    EmptyField,
    EmptyReferenceSet,
    ProvenanceOutOfBounds,
)

ANSWER_CATEGORIES = ("correct-candidate", "wrong-candidate", "neither")
ANSWERABILITY_LABELS = ("Yes", "Likely", "No")


def normalize_phrase(text: str) -> str:
    """Strip leading/trailing whitespace and collapse internal runs to one space.

    Case and punctuation are preserved; case handling is a similarity-time
    concern.
    """
    return " ".join(text.split())


@dataclass(frozen=True)
class DerivationStep:
    """One relational fact <head, relation, tail>, optionally tied to a
    source sentence via 0-based (article_index, sentence_index) provenance."""

    head: str
    relation: str
    tail: str
    provenance: tuple[int, int] | None = None

    @property
    def triple(self) -> tuple[str, str, str]:
        return (self.head, self.relation, self.tail)


@dataclass(frozen=True)
class Derivation:
    """A set of derivation steps.

    Semantics are order-independent; step order is preserved only for
    display and deterministic iteration.
    """

    steps: tuple[DerivationStep, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def triple_multiset(self) -> Counter:
        """Multiset of (head, relation, tail) triples, ignoring order and
        provenance. This is the equality notion used in tests."""
        return Counter(step.triple for step in self.steps)


@dataclass(frozen=True)
class ReferenceSet:
    """The n golden derivations for one question (n >= 1; the released
    data regime carries n = 3)."""

    question_id: str
    references: tuple[Derivation, ...]

    def __post_init__(self):
        if not self.references:
            raise EmptyReferenceSet(self.question_id)

    def __len__(self) -> int:
        return len(self.references)


@dataclass(frozen=True)
class Instance:
    """A question with its supporting articles and optional per-sentence
    supporting-fact flags."""

    question_id: str
    question: str
    answer: str
    articles: tuple[tuple[str, tuple[str, ...]], ...]  # (title, sentences)
    sf_flags: tuple[tuple[bool, ...], ...] | None = None

    def is_supporting_fact(self, article_index: int, sentence_index: int) -> bool:
        if self.sf_flags is None:
            return False
        return self.sf_flags[article_index][sentence_index]


@dataclass(frozen=True)
class AnnotationSubmission:
    """One worker's raw output for one question."""

    question_id: str
    worker_id: str
    chosen_answer: str  # one of ANSWER_CATEGORIES
    derivation: Derivation

    def __post_init__(self):
        if self.chosen_answer not in ANSWER_CATEGORIES:
            raise ValueError(f"bad answer category: {self.chosen_answer!r}")


@dataclass(frozen=True)
class AnswerabilityJudgement:
    """One worker's three-level answerability label for one question."""

    question_id: str
    worker_id: str
    label: str  # one of ANSWERABILITY_LABELS

    def __post_init__(self):
        if self.label not in ANSWERABILITY_LABELS:
            raise ValueError(f"bad answerability label: {self.label!r}")


def validate_derivation(raw: Derivation, context: Instance | None = None) -> Derivation:
    """Normalize phrases and check invariants; returns a validated derivation.

    Raises EmptyDerivation for zero steps, EmptyField for a blank
    head/relation/tail (reporting step index and field), and
    ProvenanceOutOfBounds when `context` is given and a step's provenance
    indices fall outside its articles/sentences.

    Duplicate steps are permitted (a warning is issued, not an error);
    the precision denominator counts them.
    """
    if len(raw.steps) == 0:
        raise EmptyDerivation("derivation has no steps")

    steps = []
    for i, step in enumerate(raw.steps):
        head = normalize_phrase(step.head)
        relation = normalize_phrase(step.relation)
        tail = normalize_phrase(step.tail)
        for name, value in (("head", head), ("relation", relation), ("tail", tail)):
            if not value:
                raise EmptyField(i, name)
        if step.provenance is not None and context is not None:
            a, s = step.provenance
            if not (0 <= a < len(context.articles)):
                raise ProvenanceOutOfBounds(
                    f"step {i}: article index {a} out of range"
                )
            if not (0 <= s < len(context.articles[a][1])):
                raise ProvenanceOutOfBounds(
                    f"step {i}: sentence index {s} out of range for article {a}"
                )
        steps.append(DerivationStep(head, relation, tail, step.provenance))

    triples = Counter(s.triple for s in steps)
    dupes = [t for t, n in triples.items() if n > 1]
    if dupes:
        warnings.warn(f"derivation contains duplicate steps: {dupes}", stacklevel=2)

    return Derivation(tuple(steps))


@dataclass
class StepCountHistogram:
    """Reference derivations bucketed by step count."""

    exact: Counter = field(default_factory=Counter)

    @property
    def two(self) -> int:
        return self.exact.get(2, 0)

    @property
    def three(self) -> int:
        return self.exact.get(3, 0)

    @property
    def four_plus(self) -> int:
        return sum(n for k, n in self.exact.items() if k >= 4)

    @property
    def total(self) -> int:
        return sum(self.exact.values())


def derivation_step_count_histogram(corpus: list[ReferenceSet]) -> StepCountHistogram:
    """Count golden derivations by their number of steps."""
    hist = StepCountHistogram()
    for refset in corpus:
        for ref in refset.references:
            hist.exact[len(ref)] += 1
    return hist
