import functools

import pytest
from hypothesis import given, strategies as st

from deriveval.textsim import levenshtein_distance, phrase_similarity


@functools.cache
def recursive_distance(a: str, b: str) -> int:
    """Textbook recursive definition; the DP oracle."""
    if not a:
        return len(b)
    if not b:
        return len(a)
    cost = 0 if a[0] == b[0] else 1
    return min(
        recursive_distance(a[1:], b) + 1,
        recursive_distance(a, b[1:]) + 1,
        recursive_distance(a[1:], b[1:]) + cost,
    )


class TestDistance:
    @pytest.mark.parametrize("a,b,expected", [
        ("abc", "abc", 0),
        ("kitten", "sitting", 3),
        ("", "abc", 3),
        ("abc", "", 3),
        ("", "", 0),
    ])
    def test_known_values(self, a, b, expected):
        assert levenshtein_distance(a, b) == expected

    @given(st.text(alphabet="abc", max_size=6), st.text(alphabet="abc", max_size=6))
    def test_matches_recursive_oracle(self, a, b):
        assert levenshtein_distance(a, b) == recursive_distance(a, b)

    @given(st.text(max_size=20), st.text(max_size=20))
    def test_symmetric(self, a, b):
        assert levenshtein_distance(a, b) == levenshtein_distance(b, a)


class TestSimilarity:
    def test_identity(self):
        assert phrase_similarity("Malfunkshun", "Malfunkshun") == 1.0

    def test_kitten_sitting(self):
        assert phrase_similarity("kitten", "sitting") == pytest.approx(1 - 3 / 7)

    def test_disjoint(self):
        assert phrase_similarity("abc", "xyz") == 0.0

    def test_empty_vs_nonempty(self):
        assert phrase_similarity("", "abc") == 0.0

    def test_both_empty(self):
        assert phrase_similarity("", "") == 1.0

    def test_case_folding_default(self):
        assert phrase_similarity("An American Director", "an american director") == 1.0

    def test_case_folding_off(self):
        assert phrase_similarity("ABC", "abc", fold_case=False) == 0.0

    @given(st.text(max_size=30), st.text(max_size=30))
    def test_symmetry(self, a, b):
        assert phrase_similarity(a, b) == phrase_similarity(b, a)

    @given(st.text(max_size=30))
    def test_self_similarity(self, a):
        assert phrase_similarity(a, a) == 1.0

    @given(st.text(max_size=30), st.text(max_size=30))
    def test_range(self, a, b):
        assert 0.0 <= phrase_similarity(a, b) <= 1.0
