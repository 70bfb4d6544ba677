"""Command-line entry point.

Subcommands: evaluate, baseline, pipeline, validate, synth. Exit codes:
0 success, 2 input/schema error, 1 internal error. Input errors are
reported as a one-line JSON object on stderr for scriptability.
"""

from __future__ import annotations

import argparse
import functools
import json
import sys
from pathlib import Path

from . import baselines, corpus, synth, textsim
from .errors import InputError
from .metrics import SCORER_ORDER, ScorerKind


def _similarity(fold_case: bool):
    return functools.partial(textsim.phrase_similarity, fold_case=fold_case)


def _scorers(names: list[str] | None) -> tuple[ScorerKind, ...]:
    if not names:
        return SCORER_ORDER
    return tuple(s for s in SCORER_ORDER if s.value in names)


def _write_report(report: corpus.CorpusReport, out_path: str | None, fmt: str):
    if fmt == "tsv":
        text = report.to_tsv()
    else:
        text = json.dumps(report.to_json_obj(), ensure_ascii=False, indent=2) + "\n"
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_evaluate(args) -> int:
    instances = None
    if args.instances:
        instances = {i.question_id: i for i in corpus.load_instances(args.instances)}
    references = corpus.load_derivations(args.references, instances=instances)
    predictions = corpus.load_derivations(args.predictions, single=True, instances=instances)
    report = corpus.evaluate_corpus(
        predictions, references,
        scorers=_scorers(args.scorer),
        similarity=_similarity(not args.no_case_fold),
        aggregate=args.aggregate,
        gstar_policy=args.gstar_policy,
        strict_missing=args.strict,
    )
    _write_report(report, args.output, args.format)
    return 0


def cmd_baseline(args) -> int:
    instances = corpus.load_instances(args.instances)
    by_instance = baselines.load_annotation_corpus(args.parses) if args.parses else {}
    shared = by_instance.get(None, {})
    predictions = {}
    for instance in instances:
        annotations = {**shared, **by_instance.get(instance.question_id, {})}
        if args.which == "ie":
            derivation = baselines.baseline_ie(
                instance, annotations, sf_only=not args.all_sentences, fallback=args.fallback)
        else:
            derivation = baselines.baseline_core(
                instance, annotations, fallback=args.fallback, span=args.core_span)
        if len(derivation) > 0:
            predictions[instance.question_id] = derivation
    corpus.write_derivations(args.output, predictions)
    return 0


def cmd_pipeline(args) -> int:
    submissions = corpus.load_submissions(args.submissions)
    retained, stats = corpus.filter_submissions(submissions, retain_policy=args.retain_policy)
    result = {"filter_stats": stats.as_dict()}

    if args.judgements:
        judgements = corpus.load_judgements(args.judgements)
        by_question = {}
        for j in judgements:
            by_question.setdefault(j.question_id, []).append(j)
        votes = {qid: corpus.majority_vote(js) for qid, js in by_question.items()}
        retained = corpus.filter_by_answerability(retained, votes)
        result["agreement"] = corpus.agreement_report(judgements).as_dict()

    corpus.write_derivations(args.output, retained)
    result["retained_questions"] = sorted(retained)
    sys.stdout.write(json.dumps(result, ensure_ascii=False, indent=2) + "\n")
    return 0


_VALIDATORS = {
    "instances": corpus.load_instances,
    "references": corpus.load_derivations,
    "predictions": functools.partial(corpus.load_derivations, single=True),
    "submissions": corpus.load_submissions,
    "judgements": corpus.load_judgements,
}


def cmd_validate(args) -> int:
    kinds = [args.kind] if args.kind != "auto" else list(_VALIDATORS)
    errors = []
    for kind in kinds:
        try:
            _VALIDATORS[kind](args.path)
        except InputError as exc:
            errors.append(f"as {kind}: {exc}")
        else:
            print(f"{args.path}: valid as {kind}")
            return 0
    for line in errors:
        print(line, file=sys.stderr)
    raise InputError(f"{args.path}: not valid as any of {kinds}")


def cmd_synth(args) -> int:
    config = synth.SynthConfig(
        seed=args.seed, n_instances=args.n, n_references=args.references,
        drop_step=args.drop_step, relation_edit=args.relation_edit,
        phrase_noise=args.phrase_noise)
    references, predictions, manifest = synth.generate(config)
    out = Path(args.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    corpus.write_derivations(out / "references.json", references)
    corpus.write_derivations(out / "predictions.json", predictions)
    (out / "manifest.json").write_text(
        json.dumps(manifest, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deriveval",
        description="Evaluate semi-structured answer derivations against golden references.")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("evaluate", help="score a prediction file against references")
    ev.add_argument("--references", required=True, help="reference derivations (JSON)")
    ev.add_argument("--predictions", required=True, help="predicted derivations (JSON)")
    ev.add_argument("--instances", help="optional instances file for provenance bounds checks")
    ev.add_argument("--scorer", action="append", choices=[s.value for s in SCORER_ORDER],
                    help="scorer(s) to run; default all three")
    ev.add_argument("--no-case-fold", action="store_true",
                    help="compare phrases case-sensitively (default folds to lowercase; "
                         "similarity is 1 - edit_distance / max_length)")
    ev.add_argument("--gstar-policy", choices=["score", "f1"], default="score",
                    help="winning-reference rule: best alignment score (default) or best f1")
    ev.add_argument("--aggregate", choices=["macro", "micro"], default="macro")
    ev.add_argument("--strict", action="store_true",
                    help="error on references without predictions instead of scoring 0")
    ev.add_argument("--format", choices=["json", "tsv"], default="json")
    ev.add_argument("--output", help="write the report here instead of stdout")
    ev.set_defaults(func=cmd_evaluate)

    bl = sub.add_parser("baseline", help="run a heuristic derivation generator")
    bl.add_argument("--instances", required=True)
    bl.add_argument("--parses", help="columnar dependency annotation file")
    bl.add_argument("--which", choices=["ie", "core"], required=True)
    bl.add_argument("--fallback", action="store_true",
                    help="use the naive built-in annotator for unparsed sentences")
    bl.add_argument("--all-sentences", action="store_true",
                    help="ie only: extract from every sentence, not just supporting facts")
    bl.add_argument("--core-span", choices=["subtree", "token"], default="subtree",
                    help="render the root's right child as its full subtree or bare token")
    bl.add_argument("--output", required=True, help="prediction file to write")
    bl.set_defaults(func=cmd_baseline)

    pl = sub.add_parser("pipeline", help="filter raw submissions into reference sets")
    pl.add_argument("--submissions", required=True)
    pl.add_argument("--judgements", help="answerability judgements; enables the Yes-only filter")
    pl.add_argument("--retain-policy", choices=["exact3", "sample3"], default="exact3")
    pl.add_argument("--output", required=True, help="retained reference file to write")
    pl.set_defaults(func=cmd_pipeline)

    va = sub.add_parser("validate", help="check a data file against its schema")
    va.add_argument("path")
    va.add_argument("--kind", choices=["auto", *_VALIDATORS], default="auto")
    va.set_defaults(func=cmd_validate)

    sy = sub.add_parser("synth", help="generate seeded synthetic references and predictions")
    sy.add_argument("--seed", type=int, required=True)
    sy.add_argument("--n", type=int, default=10, help="number of instances")
    sy.add_argument("--references", type=int, default=3, help="references per instance")
    sy.add_argument("--drop-step", type=float, default=0.0)
    sy.add_argument("--relation-edit", type=float, default=0.0)
    sy.add_argument("--phrase-noise", type=float, default=0.0)
    sy.add_argument("--output-dir", required=True)
    sy.set_defaults(func=cmd_synth)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        error = {"error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(error, ensure_ascii=False), file=sys.stderr)
        return 2
    except Exception as exc:  # internal error
        error = {"error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(error, ensure_ascii=False), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
