import pytest

from deriveval.errors import EmptyDerivation, EmptyField, ProvenanceOutOfBounds
from deriveval.model import (
    Derivation,
    DerivationStep,
    Instance,
    ReferenceSet,
    derivation_step_count_histogram,
    normalize_phrase,
    validate_derivation,
)


def deriv(*triples):
    return Derivation(tuple(DerivationStep(h, r, t) for h, r, t in triples))


class TestNormalizePhrase:
    def test_strips_and_collapses(self):
        assert normalize_phrase("  Malfunkshun ") == "Malfunkshun"
        assert normalize_phrase("a  rock\tband") == "a rock band"

    def test_preserves_case_and_punctuation(self):
        assert normalize_phrase("Greenwich Village, New York City.") == \
            "Greenwich Village, New York City."


class TestValidateDerivation:
    def test_already_valid_passes_through(self):
        d = deriv(("Malfunkshun", "is", "a rock band"))
        assert validate_derivation(d) == d

    def test_normalizes_whitespace(self):
        d = deriv(("  Malfunkshun ", "is", "a  rock band"))
        assert validate_derivation(d) == deriv(("Malfunkshun", "is", "a rock band"))

    def test_empty_derivation_rejected(self):
        with pytest.raises(EmptyDerivation):
            validate_derivation(Derivation(()))

    def test_empty_field_reports_step_and_field(self):
        d = deriv(("a", "is", "b"), ("c", "   ", "d"))
        with pytest.raises(EmptyField) as exc:
            validate_derivation(d)
        assert exc.value.step_index == 1
        assert exc.value.field == "relation"

    def test_idempotent(self):
        d = deriv(("  a  b ", " is ", "c"))
        once = validate_derivation(d)
        assert validate_derivation(once) == once

    def test_order_preserved(self):
        d = deriv(("a", "is", "b"), ("c", "is", "d"))
        assert [s.triple for s in validate_derivation(d)] == \
            [("a", "is", "b"), ("c", "is", "d")]

    def test_duplicates_warn_but_pass(self):
        d = deriv(("a", "is", "b"), ("a", "is", "b"))
        with pytest.warns(UserWarning):
            out = validate_derivation(d)
        assert len(out) == 2

    def test_provenance_bounds(self):
        instance = Instance("q", "?", "a", (("T", ("one sentence.",)),))
        good = Derivation((DerivationStep("a", "is", "b", (0, 0)),))
        assert validate_derivation(good, instance)
        bad = Derivation((DerivationStep("a", "is", "b", (0, 1)),))
        with pytest.raises(ProvenanceOutOfBounds):
            validate_derivation(bad, instance)
        bad = Derivation((DerivationStep("a", "is", "b", (1, 0)),))
        with pytest.raises(ProvenanceOutOfBounds):
            validate_derivation(bad, instance)


class TestHistogram:
    def test_single_two_step(self):
        corpus = [ReferenceSet("q", (deriv(("a", "is", "b"), ("c", "is", "d")),))]
        hist = derivation_step_count_histogram(corpus)
        assert dict(hist.exact) == {2: 1}

    def test_counting_across_sets(self):
        two = deriv(("a", "is", "b"), ("c", "is", "d"))
        three = deriv(("a", "is", "b"), ("c", "is", "d"), ("e", "is", "f"))
        corpus = [
            ReferenceSet("q1", (two,)),
            ReferenceSet("q2", (two,)),
            ReferenceSet("q3", (three,)),
        ]
        hist = derivation_step_count_histogram(corpus)
        assert dict(hist.exact) == {2: 2, 3: 1}
        assert hist.two == 2 and hist.three == 1 and hist.four_plus == 0

    def test_buckets_sum_to_total(self):
        steps = [("a", "is", "b")] * 6
        corpus = [ReferenceSet(f"q{n}", (deriv(*steps[:n]),)) for n in (2, 3, 4, 5, 6)]
        hist = derivation_step_count_histogram(corpus)
        assert hist.two + hist.three + hist.four_plus == hist.total == 5
        assert hist.four_plus == 3
