import json

import pytest

from deriveval.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEvaluate:
    def test_identical_predictions_tsv(self, data_dir, tmp_path, capsys):
        refs = json.loads((data_dir / "references.json").read_text())
        preds = {qid: [derivs[0]] for qid, derivs in refs.items()}
        pred_path = tmp_path / "preds.json"
        pred_path.write_text(json.dumps(preds))
        code, out, _ = run(capsys, "evaluate",
                           "--references", str(data_dir / "references.json"),
                           "--predictions", str(pred_path),
                           "--format", "tsv")
        assert code == 0
        assert "full\t1.0000\t1.0000\t1.0000" in out

    def test_fixture_predictions_match_snapshot(self, data_dir, snapshot_dir, tmp_path, capsys):
        out_path = tmp_path / "report.json"
        code, _, _ = run(capsys, "evaluate",
                         "--references", str(data_dir / "references.json"),
                         "--predictions", str(data_dir / "predictions.json"),
                         "--output", str(out_path))
        assert code == 0
        assert out_path.read_bytes() == (snapshot_dir / "scores_fixture.json").read_bytes()

    def test_missing_file_exit_2(self, data_dir, capsys):
        code, _, err = run(capsys, "evaluate",
                           "--references", str(data_dir / "no_such_file.json"),
                           "--predictions", str(data_dir / "predictions.json"))
        assert code == 2
        assert json.loads(err)["error"] == "ParseError"

    def test_scorer_subset(self, data_dir, capsys):
        code, out, _ = run(capsys, "evaluate",
                           "--references", str(data_dir / "references.json"),
                           "--predictions", str(data_dir / "predictions.json"),
                           "--scorer", "full", "--format", "tsv")
        assert code == 0
        assert out.startswith("full\t")
        assert "entity" not in out


class TestBaseline:
    @pytest.mark.parametrize("which", ["ie", "core"])
    def test_matches_snapshot(self, which, data_dir, snapshot_dir, tmp_path, capsys):
        out_path = tmp_path / f"{which}.json"
        code, _, _ = run(capsys, "baseline",
                         "--instances", str(data_dir / "instances.json"),
                         "--parses", str(data_dir / "parses.conll"),
                         "--which", which,
                         "--output", str(out_path))
        assert code == 0
        assert out_path.read_bytes() == \
            (snapshot_dir / f"{which}_predictions.json").read_bytes()

    def test_core_fallback_without_parses(self, data_dir, tmp_path, capsys):
        out_path = tmp_path / "core_fb.json"
        code, _, _ = run(capsys, "baseline",
                         "--instances", str(data_dir / "instances.json"),
                         "--which", "core", "--fallback",
                         "--output", str(out_path))
        assert code == 0
        assert json.loads(out_path.read_text())

    def test_missing_annotations_without_fallback(self, data_dir, tmp_path, capsys):
        code, _, err = run(capsys, "baseline",
                           "--instances", str(data_dir / "instances.json"),
                           "--which", "core",
                           "--output", str(tmp_path / "x.json"))
        assert code == 2
        assert json.loads(err)["error"] == "MissingAnnotations"

    def test_output_revalidates(self, data_dir, snapshot_dir, capsys):
        code, out, _ = run(capsys, "validate",
                           str(snapshot_dir / "ie_predictions.json"),
                           "--kind", "predictions")
        assert code == 0
        assert "valid" in out


class TestPipeline:
    def test_full_flow(self, data_dir, tmp_path, capsys):
        out_path = tmp_path / "retained.json"
        code, out, _ = run(capsys, "pipeline",
                           "--submissions", str(data_dir / "submissions.json"),
                           "--judgements", str(data_dir / "judgements.json"),
                           "--output", str(out_path))
        assert code == 0
        result = json.loads(out)
        assert result["retained_questions"] == ["qa", "qd"]
        assert result["filter_stats"]["dropped_wrong"] == 1
        assert result["filter_stats"]["dropped_neither"] == 1
        assert result["filter_stats"]["dropped_not_three"] == 3
        assert "alpha" in result["agreement"]
        assert sorted(json.loads(out_path.read_text())) == ["qa", "qd"]

    def test_without_judgements(self, data_dir, tmp_path, capsys):
        code, out, _ = run(capsys, "pipeline",
                           "--submissions", str(data_dir / "submissions.json"),
                           "--output", str(tmp_path / "retained.json"))
        assert code == 0
        assert json.loads(out)["retained_questions"] == ["qa", "qd", "qe", "qf"]

    def test_empty_input(self, tmp_path, capsys):
        subs = tmp_path / "subs.json"
        subs.write_text("[]")
        code, out, _ = run(capsys, "pipeline",
                           "--submissions", str(subs),
                           "--output", str(tmp_path / "retained.json"))
        assert code == 0
        assert json.loads(out)["retained_questions"] == []


class TestValidate:
    def test_valid_file(self, data_dir, capsys):
        code, out, _ = run(capsys, "validate", str(data_dir / "instances.json"))
        assert code == 0
        assert "valid as instances" in out

    def test_duplicate_id_exit_2(self, tmp_path, capsys):
        obj = {"id": "x", "question": "?", "answer": "a",
               "articles": [{"title": "T", "sentences": ["s."]}]}
        path = tmp_path / "dup.json"
        path.write_text(json.dumps([obj, obj]))
        code, _, err = run(capsys, "validate", str(path), "--kind", "instances")
        assert code == 2

    def test_blank_relation_exit_2(self, tmp_path, capsys):
        path = tmp_path / "blank.json"
        path.write_text(json.dumps({"q": [[[None, None, "a", "", "b"]]]}))
        code, _, _ = run(capsys, "validate", str(path), "--kind", "references")
        assert code == 2


class TestSynth:
    def test_zero_noise_predictions_equal_first_reference(self, tmp_path, capsys):
        code, _, _ = run(capsys, "synth", "--seed", "7", "--n", "5",
                         "--output-dir", str(tmp_path))
        assert code == 0
        refs = json.loads((tmp_path / "references.json").read_text())
        preds = json.loads((tmp_path / "predictions.json").read_text())
        for qid, derivs in preds.items():
            assert derivs[0] == refs[qid][0]

    def test_drop_step_lowers_recall(self, tmp_path, capsys):
        run(capsys, "synth", "--seed", "11", "--n", "8", "--drop-step", "1.0",
            "--output-dir", str(tmp_path))
        refs = json.loads((tmp_path / "references.json").read_text())
        preds = json.loads((tmp_path / "predictions.json").read_text())
        manifest = json.loads((tmp_path / "manifest.json").read_text())
        dropped = [q for q, m in manifest.items() if "drop-step" in m["perturbations"]]
        assert dropped
        for qid in dropped:
            assert len(preds[qid][0]) < len(refs[qid][0])

    def test_seeded_runs_identical(self, tmp_path, capsys):
        a, b = tmp_path / "a", tmp_path / "b"
        for out in (a, b):
            run(capsys, "synth", "--seed", "42", "--n", "6",
                "--drop-step", "0.5", "--phrase-noise", "0.5",
                "--output-dir", str(out))
        for name in ("references.json", "predictions.json", "manifest.json"):
            assert (a / name).read_bytes() == (b / name).read_bytes()
