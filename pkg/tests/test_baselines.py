import pytest

from deriveval import corpus
from deriveval.baselines import (
    baseline_core,
    baseline_ie,
    extract_triples,
    load_annotation_corpus,
    naive_fallback_annotate,
    parse_annotation_file,
)
from deriveval.errors import (
    MissingAnnotations,
    MissingLocusComment,
    ParseError,
)
from deriveval.model import Instance, validate_derivation


@pytest.fixture(scope="module")
def annotations(data_dir):
    return load_annotation_corpus(data_dir / "parses.conll")


@pytest.fixture(scope="module")
def instances(data_dir):
    return {i.question_id: i for i in corpus.load_instances(data_dir / "instances.json")}


class TestParseAnnotationFile:
    def test_fixture_is_complete(self, annotations, instances):
        # every SF sentence of the fixture corpus is parsed
        for qid, inst in instances.items():
            for a, row in enumerate(inst.sf_flags):
                for s, flag in enumerate(row):
                    if flag:
                        assert (a, s) in annotations[qid]

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.conll"
        path.write_text("")
        assert parse_annotation_file(path) == {}

    def test_head_out_of_range(self, tmp_path):
        path = tmp_path / "bad.conll"
        path.write_text("# locus = 0,0\n1\tA\ta\tNOUN\t_\t_\t9\tdep\t_\t_\n")
        with pytest.raises(ParseError):
            parse_annotation_file(path)

    def test_missing_locus_comment(self, tmp_path):
        path = tmp_path / "nolocus.conll"
        path.write_text("1\tA\ta\tNOUN\t_\t_\t0\troot\t_\t_\n")
        with pytest.raises(MissingLocusComment):
            parse_annotation_file(path)

    def test_bad_column_count(self, tmp_path):
        path = tmp_path / "cols.conll"
        path.write_text("# locus = 0,0\n1\tA\ta\n")
        with pytest.raises(ParseError):
            parse_annotation_file(path)

    def test_two_roots_rejected(self, tmp_path):
        path = tmp_path / "roots.conll"
        path.write_text("# locus = 0,0\n"
                        "1\tA\ta\tNOUN\t_\t_\t0\troot\t_\t_\n"
                        "2\tB\tb\tNOUN\t_\t_\t0\troot\t_\t_\n")
        with pytest.raises(ParseError):
            parse_annotation_file(path)


class TestExhaustiveBaseline:
    def test_recovers_target_triple(self, annotations, instances):
        d = baseline_ie(instances["q0001"], annotations["q0001"])
        assert ("Scott Derrickson", "is", "an American director") in \
            {s.triple for s in d.steps}

    def test_verbless_sentence_yields_nothing(self):
        ann = naive_fallback_annotate("Androscoggin Bank Colisee.")
        assert extract_triples(ann) == []

    def test_sf_only_provenance(self, annotations, instances):
        for qid, inst in instances.items():
            d = baseline_ie(inst, annotations[qid], sf_only=True)
            for step in d.steps:
                assert inst.is_supporting_fact(*step.provenance)

    def test_steps_validate(self, annotations, instances):
        for qid, inst in instances.items():
            d = baseline_ie(inst, annotations[qid])
            if len(d) > 0:
                assert validate_derivation(d, inst)

    def test_missing_annotation_without_fallback(self, instances):
        with pytest.raises(MissingAnnotations):
            baseline_ie(instances["q0001"], annotations=None, fallback=False)

    def test_deterministic(self, annotations, instances):
        a = baseline_ie(instances["q0002"], annotations["q0002"])
        b = baseline_ie(instances["q0002"], annotations["q0002"])
        assert a == b


class TestCoreBaseline:
    def test_album_sentence(self, annotations, instances):
        d = baseline_core(instances["q0004"], annotations["q0004"])
        assert ("Return to Olympus", "is",
                "the only album by the American rock band Malfunkshun") in \
            {s.triple for s in d.steps}

    def test_at_most_one_step_per_sentence(self, annotations, instances):
        for qid, inst in instances.items():
            d = baseline_core(inst, annotations[qid])
            loci = [s.provenance for s in d.steps]
            assert len(loci) == len(set(loci))

    def test_title_is_head(self, annotations, instances):
        inst = instances["q0004"]
        d = baseline_core(inst, annotations["q0004"])
        titles = {inst.articles[a][0] for a, _ in (s.provenance for s in d.steps)}
        assert {s.head for s in d.steps} == titles

    def test_noun_root_skipped(self, tmp_path):
        path = tmp_path / "noun_root.conll"
        path.write_text("# locus = 0,0\n"
                        "1\tHarbour\tharbour\tNOUN\t_\t_\t0\troot\t_\t_\n"
                        "2\tview\tview\tNOUN\t_\t_\t1\tdep\t_\t_\n")
        ann = parse_annotation_file(path)
        inst = Instance("q", "?", "a", (("T", ("Harbour view",)),), ((True,),))
        assert len(baseline_core(inst, ann)) == 0

    def test_root_without_right_dependent_skipped(self, tmp_path):
        path = tmp_path / "no_right.conll"
        path.write_text("# locus = 0,0\n"
                        "1\tBirds\tbirds\tNOUN\t_\t_\t2\tnsubj\t_\t_\n"
                        "2\tsing\tsing\tVERB\t_\t_\t0\troot\t_\t_\n")
        ann = parse_annotation_file(path)
        inst = Instance("q", "?", "a", (("T", ("Birds sing",)),), ((True,),))
        assert len(baseline_core(inst, ann)) == 0

    def test_token_span_mode(self, annotations, instances):
        d = baseline_core(instances["q0004"], annotations["q0004"], span="token")
        assert ("Return to Olympus", "is", "album") in {s.triple for s in d.steps}


class TestNaiveFallback:
    def test_copula(self):
        ann = naive_fallback_annotate("A is B.")
        root = ann.root_index()
        assert ann.tokens[root].surface == "is"
        rights = [c for c in ann.children(root) if c > root]
        assert ann.subtree_span(min(rights)) == "B"

    def test_empty_sentence(self):
        assert naive_fallback_annotate("").tokens == ()

    def test_participle_promoted_over_auxiliary(self):
        ann = naive_fallback_annotate("Malfunkshun was formed in 1980.")
        assert ann.tokens[ann.root_index()].surface == "formed"

    def test_deterministic(self):
        s = "The Androscoggin Bank Colisee is an arena in Lewiston."
        assert naive_fallback_annotate(s) == naive_fallback_annotate(s)

    def test_core_with_fallback(self, instances):
        d = baseline_core(instances["q0005"], annotations=None, fallback=True)
        assert len(d) >= 1
