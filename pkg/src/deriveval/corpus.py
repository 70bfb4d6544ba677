"""Dataset I/O, the annotation quality pipeline, agreement statistics, and
corpus-level metric aggregation.

File schemas (all UTF-8 JSON):

* Instances: array of objects {id, question, answer,
  articles: [{title, sentences: [...]}], sf_flags?: [[bool, ...], ...]}.
* References/predictions: object mapping id -> array of derivations; each
  derivation is an array of steps [article_idx, sentence_idx, head,
  relation, tail] with 1-based, nullable indices. Prediction files carry
  exactly one derivation per id.
* Submissions: array of {question_id, worker_id, chosen_answer,
  derivation: [steps]}.
* Judgements: array of {question_id, worker_id, label}.
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from pathlib import Path

from . import textsim
from .errors import (
    DuplicateId,
    InsufficientData,
    MissingVote,
    NoJudgements,
    ParseError,
    SchemaViolation,
    UnknownId,
)
from .metrics import (
    SCORER_ORDER,
    MetricReport,
    PhraseSimilarity,
    ScorerKind,
    evaluate_derivation,
    f1_score,
)
from .model import (
    ANSWERABILITY_LABELS,
    AnnotationSubmission,
    AnswerabilityJudgement,
    Derivation,
    DerivationStep,
    Instance,
    ReferenceSet,
    validate_derivation,
)

SPLIT = "Split"


# ---------------------------------------------------------------------------
# Loading


def _load_json(path) -> object:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}: {exc.msg}") from exc


def _require(condition: bool, message: str):
    if not condition:
        raise SchemaViolation(message)


def load_instances(path) -> list[Instance]:
    """Load and validate an instances file; duplicate ids are rejected."""
    data = _load_json(path)
    _require(isinstance(data, list), f"{path}: instances file must be a JSON array")
    instances = []
    seen = set()
    for i, obj in enumerate(data):
        where = f"{path}: instance #{i}"
        _require(isinstance(obj, dict), f"{where}: not an object")
        for key in ("id", "question", "answer", "articles"):
            _require(key in obj, f"{where}: missing field {key!r}")
        qid = obj["id"]
        _require(isinstance(qid, str) and qid, f"{where}: id must be a non-empty string")
        if qid in seen:
            raise DuplicateId(f"{where}: duplicate id {qid!r}")
        seen.add(qid)
        articles = []
        _require(isinstance(obj["articles"], list) and obj["articles"],
                 f"{where}: articles must be a non-empty array")
        for j, art in enumerate(obj["articles"]):
            _require(isinstance(art, dict) and "title" in art and "sentences" in art,
                     f"{where}: article #{j} needs title and sentences")
            sentences = art["sentences"]
            _require(isinstance(sentences, list) and len(sentences) >= 1,
                     f"{where}: article #{j} needs >= 1 sentence")
            articles.append((art["title"], tuple(sentences)))
        sf_flags = None
        if obj.get("sf_flags") is not None:
            flags = obj["sf_flags"]
            _require(isinstance(flags, list) and len(flags) == len(articles),
                     f"{where}: sf_flags must align with articles")
            for j, (art, row) in enumerate(zip(articles, flags)):
                _require(isinstance(row, list) and len(row) == len(art[1]),
                         f"{where}: sf_flags row #{j} must match sentence count")
            sf_flags = tuple(tuple(bool(x) for x in row) for row in flags)
        instances.append(Instance(qid, obj["question"], obj["answer"],
                                  tuple(articles), sf_flags))
    return instances


def _step_from_record(record, where: str) -> DerivationStep:
    _require(isinstance(record, list) and len(record) == 5,
             f"{where}: step must be [article_idx, sentence_idx, head, relation, tail]")
    a, s, head, relation, tail = record
    provenance = None
    if a is not None or s is not None:
        _require(isinstance(a, int) and isinstance(s, int) and a >= 1 and s >= 1,
                 f"{where}: provenance indices must be 1-based integers or null")
        provenance = (a - 1, s - 1)  # files are 1-based, internal 0-based
    for name, value in (("head", head), ("relation", relation), ("tail", tail)):
        _require(isinstance(value, str), f"{where}: {name} must be a string")
    return DerivationStep(head, relation, tail, provenance)


def load_derivations(path, single: bool = False,
                     instances: dict[str, Instance] | None = None):
    """Load a reference file (id -> ReferenceSet) or, with single=True, a
    prediction file (id -> Derivation, exactly one derivation per id).

    When `instances` is given, step provenance is bounds-checked against it.
    """
    data = _load_json(path)
    _require(isinstance(data, dict), f"{path}: derivations file must be a JSON object")
    out = {}
    for qid in sorted(data):
        derivs = data[qid]
        where = f"{path}: id {qid!r}"
        _require(isinstance(derivs, list) and derivs,
                 f"{where}: must map to a non-empty array of derivations")
        if single:
            _require(len(derivs) == 1, f"{where}: prediction files carry exactly one derivation")
        context = instances.get(qid) if instances else None
        validated = []
        for k, steps in enumerate(derivs):
            _require(isinstance(steps, list), f"{where}: derivation #{k} must be an array")
            raw = Derivation(tuple(
                _step_from_record(rec, f"{where}: derivation #{k} step #{i}")
                for i, rec in enumerate(steps)))
            validated.append(validate_derivation(raw, context))
        out[qid] = validated[0] if single else ReferenceSet(qid, tuple(validated))
    return out


def _step_to_record(step: DerivationStep) -> list:
    if step.provenance is None:
        a = s = None
    else:
        a, s = step.provenance[0] + 1, step.provenance[1] + 1
    return [a, s, step.head, step.relation, step.tail]


def write_derivations(path, data: dict) -> None:
    """Write a reference map (id -> ReferenceSet) or prediction map
    (id -> Derivation) in the documented schema, ids sorted."""
    payload = {}
    for qid in sorted(data):
        value = data[qid]
        derivs = value.references if isinstance(value, ReferenceSet) else (value,)
        payload[qid] = [[_step_to_record(st) for st in d.steps] for d in derivs]
    Path(path).write_text(
        json.dumps(payload, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")


def load_submissions(path) -> list[AnnotationSubmission]:
    data = _load_json(path)
    _require(isinstance(data, list), f"{path}: submissions file must be a JSON array")
    out = []
    for i, obj in enumerate(data):
        where = f"{path}: submission #{i}"
        _require(isinstance(obj, dict), f"{where}: not an object")
        for key in ("question_id", "worker_id", "chosen_answer", "derivation"):
            _require(key in obj, f"{where}: missing field {key!r}")
        raw = Derivation(tuple(
            _step_from_record(rec, f"{where}: step #{j}")
            for j, rec in enumerate(obj["derivation"])))
        try:
            sub = AnnotationSubmission(obj["question_id"], obj["worker_id"],
                                       obj["chosen_answer"], raw)
        except ValueError as exc:
            raise SchemaViolation(f"{where}: {exc}") from exc
        out.append(sub)
    return out


def load_judgements(path) -> list[AnswerabilityJudgement]:
    data = _load_json(path)
    _require(isinstance(data, list), f"{path}: judgements file must be a JSON array")
    out = []
    for i, obj in enumerate(data):
        where = f"{path}: judgement #{i}"
        _require(isinstance(obj, dict), f"{where}: not an object")
        for key in ("question_id", "worker_id", "label"):
            _require(key in obj, f"{where}: missing field {key!r}")
        try:
            out.append(AnswerabilityJudgement(obj["question_id"], obj["worker_id"],
                                              obj["label"]))
        except ValueError as exc:
            raise SchemaViolation(f"{where}: {exc}") from exc
    return out


# ---------------------------------------------------------------------------
# Annotation quality pipeline


@dataclass
class FilterStats:
    """Drop counts per filter rule."""

    submissions_seen: int = 0
    dropped_wrong: int = 0
    dropped_neither: int = 0
    questions_seen: int = 0
    dropped_not_three: int = 0
    retained_questions: int = 0

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def filter_submissions(
    submissions: list[AnnotationSubmission],
    retain_policy: str = "exact3",
) -> tuple[dict[str, ReferenceSet], FilterStats]:
    """Drop wrong-answer and neither-answer submissions, then keep only
    questions left with exactly three derivations.

    retain_policy "exact3" drops questions with more than three valid
    submissions; "sample3" instead keeps the first three in worker-id
    order (deterministic).
    """
    if retain_policy not in ("exact3", "sample3"):
        raise ValueError(f"unknown retain policy: {retain_policy!r}")
    stats = FilterStats(submissions_seen=len(submissions))
    by_question: dict[str, list[AnnotationSubmission]] = defaultdict(list)
    for sub in submissions:
        if sub.chosen_answer == "wrong-candidate":
            stats.dropped_wrong += 1
            continue
        if sub.chosen_answer == "neither":
            stats.dropped_neither += 1
            continue
        by_question[sub.question_id].append(sub)
    all_ids = {s.question_id for s in submissions}
    stats.questions_seen = len(all_ids)

    retained = {}
    for qid in sorted(by_question):
        subs = sorted(by_question[qid], key=lambda s: s.worker_id)
        if len(subs) > 3 and retain_policy == "sample3":
            subs = subs[:3]
        if len(subs) != 3:
            stats.dropped_not_three += 1
            continue
        refs = tuple(validate_derivation(s.derivation) for s in subs)
        retained[qid] = ReferenceSet(qid, refs)
    stats.dropped_not_three += len(all_ids) - len(by_question)  # all subs dropped
    stats.retained_questions = len(retained)
    return retained, stats


def majority_vote(judgements: list[AnswerabilityJudgement]) -> str:
    """Strict-majority label over one question's judgements, or Split."""
    if not judgements:
        raise NoJudgements("majority vote over zero judgements")
    counts = Counter(j.label for j in judgements)
    label, top = counts.most_common(1)[0]
    if top * 2 > len(judgements):
        return label
    return SPLIT


def filter_by_answerability(
    refsets: dict[str, ReferenceSet],
    votes: dict[str, str],
) -> dict[str, ReferenceSet]:
    """Keep only ids whose majority answerability label is Yes."""
    for qid in refsets:
        if qid not in votes:
            raise MissingVote(f"no answerability vote for id {qid!r}")
    return {qid: rs for qid, rs in refsets.items() if votes[qid] == "Yes"}


# ---------------------------------------------------------------------------
# Agreement


def krippendorff_alpha(ratings: list[list]) -> float:
    """Krippendorff's alpha for nominal labels, units x raters, None for
    missing entries.

    Uses the coincidence-matrix formulation over pairable values: units
    with fewer than two ratings are ignored; disagreement is 0 for equal
    labels and 1 otherwise.
    """
    coincidences: Counter = Counter()
    pairable_units = 0
    for unit in ratings:
        values = [v for v in unit if v is not None]
        m = len(values)
        if m < 2:
            continue
        pairable_units += 1
        for i, a in enumerate(values):
            for j, b in enumerate(values):
                if i != j:
                    coincidences[(a, b)] += 1.0 / (m - 1)
    n = sum(coincidences.values())
    if pairable_units < 2 or n <= 1:
        raise InsufficientData("need at least two units with >= 2 pairable values")
    totals: Counter = Counter()
    for (a, _), c in coincidences.items():
        totals[a] += c
    observed = sum(c for (a, b), c in coincidences.items() if a != b)
    expected = sum(totals[a] * totals[b]
                   for a in totals for b in totals if a != b) / (n - 1)
    if expected == 0.0:
        # every pairable value carries the same label
        return 1.0
    return 1.0 - observed / expected


@dataclass
class AgreementReport:
    """Agreement statistic plus the majority-vote label distribution.

    label_distribution uses all voted questions (Split included in the
    base, reported via split_fraction); label_distribution_decided
    renormalizes over non-Split questions only.
    """

    alpha: float
    label_distribution: dict[str, float]
    split_fraction: float
    label_distribution_decided: dict[str, float] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "label_distribution": self.label_distribution,
            "split_fraction": self.split_fraction,
            "label_distribution_decided": self.label_distribution_decided,
        }


def agreement_report(judgements: list[AnswerabilityJudgement]) -> AgreementReport:
    """Compute alpha over the rater matrix and the majority-vote shares."""
    by_question: dict[str, list[AnswerabilityJudgement]] = defaultdict(list)
    for j in judgements:
        by_question[j.question_id].append(j)
    qids = sorted(by_question)
    raters = sorted({j.worker_id for j in judgements})
    matrix = [[next((j.label for j in by_question[q] if j.worker_id == r), None)
               for r in raters] for q in qids]
    alpha = krippendorff_alpha(matrix)

    votes = Counter(majority_vote(by_question[q]) for q in qids)
    total = len(qids)
    distribution = {label: votes.get(label, 0) / total for label in ANSWERABILITY_LABELS}
    split_fraction = votes.get(SPLIT, 0) / total
    decided = total - votes.get(SPLIT, 0)
    decided_distribution = {
        label: (votes.get(label, 0) / decided if decided else 0.0)
        for label in ANSWERABILITY_LABELS
    }
    return AgreementReport(alpha, distribution, split_fraction, decided_distribution)


# ---------------------------------------------------------------------------
# Corpus-level evaluation


@dataclass
class CorpusReport:
    """Per-scorer aggregate precision/recall/F1 over a corpus."""

    aggregates: dict[ScorerKind, tuple[float, float, float]]
    instance_count: int
    missing_ids: list[str]
    per_instance: dict[str, dict[ScorerKind, MetricReport]]
    aggregate_policy: str = "macro"

    def to_json_obj(self) -> dict:
        detail = {}
        for qid in sorted(self.per_instance):
            detail[qid] = {
                scorer.value: {
                    "precision": r.precision,
                    "recall": r.recall,
                    "f1": r.f1,
                    "c_star": r.c_star,
                    "winning_reference_index": r.winning_reference_index,
                    "winning_alignment": (list(map(list, r.winning_alignment.pairs))
                                          if r.winning_alignment else None),
                }
                for scorer, r in self.per_instance[qid].items()
            }
        return {
            "aggregate": self.aggregate_policy,
            "instance_count": self.instance_count,
            "missing_ids": self.missing_ids,
            "scores": {
                scorer.value: {"precision": p, "recall": r, "f1": f}
                for scorer, (p, r, f) in self.aggregates.items()
            },
            "per_instance": detail,
        }

    def to_tsv(self) -> str:
        lines = []
        for scorer in (s for s in SCORER_ORDER if s in self.aggregates):
            p, r, f = self.aggregates[scorer]
            lines.append(f"{scorer.value}\t{p:.4f}\t{r:.4f}\t{f:.4f}")
        return "\n".join(lines) + "\n"


def evaluate_corpus(
    predictions: dict[str, Derivation],
    references: dict[str, ReferenceSet],
    scorers: tuple[ScorerKind, ...] = SCORER_ORDER,
    similarity: PhraseSimilarity = textsim.phrase_similarity,
    aggregate: str = "macro",
    gstar_policy: str = "score",
    strict_missing: bool = False,
) -> CorpusReport:
    """Score a prediction map against a reference map.

    Reference ids without a prediction score 0/0/0 and are listed as
    missing (or rejected when strict_missing). A prediction for an unknown
    id raises UnknownId. Aggregation is macro (mean of per-instance
    values) or micro (pooled soft counts).
    """
    if aggregate not in ("macro", "micro"):
        raise ValueError(f"unknown aggregate policy: {aggregate!r}")
    unknown = sorted(set(predictions) - set(references))
    if unknown:
        raise UnknownId(f"predictions for unknown ids: {unknown}")
    missing = sorted(set(references) - set(predictions))
    if missing and strict_missing:
        raise UnknownId(f"references without predictions: {missing}")

    per_instance: dict[str, dict[ScorerKind, MetricReport]] = {}
    for qid in sorted(references):
        refs = references[qid]
        if qid in predictions:
            per_instance[qid] = {
                s: evaluate_derivation(predictions[qid], refs, s, similarity, gstar_policy)
                for s in scorers
            }
        else:
            per_instance[qid] = {
                s: MetricReport(0.0, 0.0, 0.0, 0.0, -1, None) for s in scorers
            }

    aggregates = {}
    n = len(per_instance)
    for scorer in scorers:
        reports = [per_instance[qid][scorer] for qid in sorted(per_instance)]
        if aggregate == "macro":
            p = sum(r.precision for r in reports) / n
            r_ = sum(r.recall for r in reports) / n
            f = sum(r.f1 for r in reports) / n
        else:
            # micro: pool soft-correct counts against pooled denominators
            total_c = sum(r.c_star for r in reports)
            total_d = sum(len(predictions[qid]) for qid in sorted(per_instance)
                          if qid in predictions)
            total_g = sum(
                len(references[qid].references[r.winning_reference_index])
                for qid, r in ((q, per_instance[q][scorer]) for q in sorted(per_instance))
                if r.winning_reference_index >= 0)
            p = total_c / total_d if total_d else 0.0
            r_ = total_c / total_g if total_g else 0.0
            f = f1_score(p, r_)
        aggregates[scorer] = (p, r_, f)
    return CorpusReport(aggregates, n, missing, per_instance, aggregate)
