"""Evaluation toolkit for semi-structured answer derivations."""

from .align import Alignment, alignment_score, best_alignment, enumerate_alignments
from .baselines import (
    baseline_core,
    baseline_ie,
    extract_triples,
    load_annotation_corpus,
    naive_fallback_annotate,
    parse_annotation_file,
)
from .corpus import (
    AgreementReport,
    CorpusReport,
    FilterStats,
    agreement_report,
    evaluate_corpus,
    filter_by_answerability,
    filter_submissions,
    krippendorff_alpha,
    load_derivations,
    load_instances,
    load_judgements,
    load_submissions,
    majority_vote,
    write_derivations,
)
from .metrics import (
    MetricReport,
    ScorerKind,
    evaluate_all_scorers,
    evaluate_derivation,
    reference_ablation,
    score_against_reference,
    step_similarity,
)
from .model import (
    AnnotationSubmission,
    AnswerabilityJudgement,
    Derivation,
    DerivationStep,
    Instance,
    ReferenceSet,
    derivation_step_count_histogram,
    normalize_phrase,
    validate_derivation,
)
from .synth import SynthConfig, generate
from .textsim import levenshtein_distance, phrase_similarity

__all__ = [
    "AgreementReport",
    "Alignment",
    "AnnotationSubmission",
    "AnswerabilityJudgement",
    "CorpusReport",
    "Derivation",
    "DerivationStep",
    "FilterStats",
    "Instance",
    "MetricReport",
    "ReferenceSet",
    "ScorerKind",
    "SynthConfig",
    "agreement_report",
    "alignment_score",
    "baseline_core",
    "baseline_ie",
    "best_alignment",
    "derivation_step_count_histogram",
    "enumerate_alignments",
    "evaluate_all_scorers",
    "evaluate_corpus",
    "evaluate_derivation",
    "extract_triples",
    "filter_by_answerability",
    "filter_submissions",
    "generate",
    "krippendorff_alpha",
    "levenshtein_distance",
    "load_annotation_corpus",
    "load_derivations",
    "load_instances",
    "load_judgements",
    "load_submissions",
    "majority_vote",
    "naive_fallback_annotate",
    "normalize_phrase",
    "parse_annotation_file",
    "phrase_similarity",
    "reference_ablation",
    "score_against_reference",
    "step_similarity",
    "validate_derivation",
    "write_derivations",
]
