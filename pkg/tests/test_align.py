import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from deriveval.align import (
    Alignment,
    alignment_score,
    best_alignment,
    enumerate_alignments,
)
from deriveval.errors import (
    DuplicateIndex,
    EmptyMatrix,
    IndexOutOfBounds,
    SizeLimitExceeded,
)

# The worked three-vs-five example: the winning alignment picks the
# entries valued 0.1, 1.0 and 0.8.
WORKED_MATRIX = np.array([
    [0.1, 0.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 1.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, 0.0, 0.8],
])


def brute_force_best(matrix) -> float:
    return max(alignment_score(matrix, a) for a in enumerate_alignments(*matrix.shape))


small_matrices = arrays(
    float,
    st.tuples(st.integers(1, 6), st.integers(1, 6)),
    elements=st.floats(0, 1, allow_nan=False),
)


class TestAlignmentScore:
    def test_worked_example(self):
        a = Alignment(((0, 0), (1, 2), (2, 4)))
        assert alignment_score(WORKED_MATRIX, a) == pytest.approx(1.9)

    def test_empty_alignment(self):
        assert alignment_score(WORKED_MATRIX, Alignment(())) == 0.0

    def test_single_cell(self):
        assert alignment_score(np.array([[1.0]]), Alignment(((0, 0),))) == 1.0

    def test_out_of_bounds(self):
        with pytest.raises(IndexOutOfBounds):
            alignment_score(WORKED_MATRIX, Alignment(((0, 5),)))

    def test_duplicate_index(self):
        with pytest.raises(DuplicateIndex):
            alignment_score(WORKED_MATRIX, Alignment(((0, 0), (1, 0))))


class TestEnumerate:
    def test_one_by_one(self):
        assert list(enumerate_alignments(1, 1)) == [Alignment(((0, 0),))]

    def test_two_by_two(self):
        assert len(list(enumerate_alignments(2, 2))) == 2

    def test_two_by_three(self):
        alignments = list(enumerate_alignments(2, 3))
        assert len(alignments) == 6
        assert len(set(alignments)) == 6

    def test_three_by_two(self):
        # injections from the column side: 3 * 2 = 6
        assert len(list(enumerate_alignments(3, 2))) == 6

    def test_all_maximal(self):
        for a in enumerate_alignments(3, 5):
            assert len(a) == 3

    def test_size_guard(self):
        with pytest.raises(SizeLimitExceeded):
            list(enumerate_alignments(9, 2))


class TestBestAlignment:
    def test_worked_example(self):
        alignment, score = best_alignment(WORKED_MATRIX)
        assert score == pytest.approx(1.9)
        assert set(alignment.pairs) >= {(0, 0), (1, 2), (2, 4)}

    def test_identity_matrix(self):
        alignment, score = best_alignment(np.eye(4))
        assert score == 4.0
        assert alignment.pairs == ((0, 0), (1, 1), (2, 2), (3, 3))

    def test_empty_matrix_rejected(self):
        with pytest.raises(EmptyMatrix):
            best_alignment(np.empty((0, 3)))

    def test_matches_brute_force_seeded(self):
        rng = np.random.default_rng(12345)
        for _ in range(300):
            m = rng.random((int(rng.integers(1, 7)), int(rng.integers(1, 7))))
            _, score = best_alignment(m)
            assert score == brute_force_best(m)

    def test_tie_break_lexicographic(self):
        # all-equal entries: every maximal alignment scores the same
        alignment, score = best_alignment(np.full((2, 3), 0.5))
        assert score == pytest.approx(1.0)
        assert alignment.pairs == ((0, 0), (1, 1))

    def test_result_is_maximal(self):
        alignment, _ = best_alignment(np.zeros((3, 5)))
        assert len(alignment) == 3

    @settings(max_examples=150, deadline=None)
    @given(small_matrices)
    def test_score_bounds(self, m):
        _, score = best_alignment(m)
        assert -1e-12 <= score <= min(m.shape) + 1e-12

    @settings(max_examples=150, deadline=None)
    @given(small_matrices)
    def test_transpose_symmetry(self, m):
        _, s1 = best_alignment(m)
        _, s2 = best_alignment(m.T)
        assert s1 == pytest.approx(s2, abs=1e-12)

    @settings(max_examples=100, deadline=None)
    @given(small_matrices, st.randoms(use_true_random=False))
    def test_permutation_invariance(self, m, rnd):
        rows = list(range(m.shape[0]))
        cols = list(range(m.shape[1]))
        rnd.shuffle(rows)
        rnd.shuffle(cols)
        _, s1 = best_alignment(m)
        _, s2 = best_alignment(m[np.ix_(rows, cols)])
        assert s1 == pytest.approx(s2, abs=1e-12)

    @settings(max_examples=100, deadline=None)
    @given(small_matrices, st.data())
    def test_monotonicity(self, m, data):
        i = data.draw(st.integers(0, m.shape[0] - 1))
        j = data.draw(st.integers(0, m.shape[1] - 1))
        _, before = best_alignment(m)
        bumped = m.copy()
        bumped[i, j] = min(1.0, bumped[i, j] + data.draw(st.floats(0, 1)))
        _, after = best_alignment(bumped)
        assert after >= before - 1e-12
