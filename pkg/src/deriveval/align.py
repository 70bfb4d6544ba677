"""Optimal one-to-one alignment between predicted and golden steps.

The score matrix holds pairwise step similarities in [0, 1]; the best
alignment maximizes the summed similarity of matched pairs. Unequal sizes
are handled by partial matching: unmatched steps contribute zero, so the
best score is bounded by min(rows, cols).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import DuplicateIndex, EmptyMatrix, IndexOutOfBounds, SizeLimitExceeded

ENUMERATION_LIMIT = 8
_TIE_EPS = 1e-9


@dataclass(frozen=True)
class Alignment:
    """A one-to-one partial pairing of (row, col) indices, sorted by row."""

    pairs: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


def as_score_matrix(entries) -> np.ndarray:
    """Coerce to a 2-D float array and check the [0, 1] entry invariant."""
    matrix = np.asarray(entries, dtype=float)
    if matrix.ndim != 2:
        raise ValueError(f"score matrix must be 2-D, got shape {matrix.shape}")
    if matrix.size and (matrix.min() < 0.0 or matrix.max() > 1.0):
        raise ValueError("score matrix entries must lie in [0, 1]")
    return matrix


def alignment_score(matrix, alignment: Alignment) -> float:
    """Sum of matrix entries over the alignment's pairs.

    Summation runs in ascending row order so scores are bit-identical with
    the brute-force oracle regardless of how the alignment was found.
    """
    m = np.asarray(matrix, dtype=float)
    n_rows, n_cols = m.shape
    seen_rows, seen_cols = set(), set()
    for d, g in alignment.pairs:
        if not (0 <= d < n_rows and 0 <= g < n_cols):
            raise IndexOutOfBounds(f"pair ({d}, {g}) outside {n_rows}x{n_cols} matrix")
        if d in seen_rows or g in seen_cols:
            raise DuplicateIndex(f"pair ({d}, {g}) repeats an index")
        seen_rows.add(d)
        seen_cols.add(g)
    total = 0.0
    for d, g in sorted(alignment.pairs):
        total += m[d, g]
    return total


def enumerate_alignments(n_d: int, n_g: int) -> Iterator[Alignment]:
    """Yield every maximal one-to-one pairing between n_d rows and n_g
    columns exactly once.

    Maximal pairings suffice for maximization: entries are non-negative, so
    some maximum-score alignment is maximal. Guarded against factorial
    blowup at ENUMERATION_LIMIT.
    """
    if n_d > ENUMERATION_LIMIT or n_g > ENUMERATION_LIMIT:
        raise SizeLimitExceeded(
            f"enumeration limited to {ENUMERATION_LIMIT} per side, got {n_d}x{n_g}"
        )
    if n_d <= n_g:
        for cols in itertools.permutations(range(n_g), n_d):
            yield Alignment(tuple((d, g) for d, g in enumerate(cols)))
    else:
        for rows in itertools.permutations(range(n_d), n_g):
            yield Alignment(tuple(sorted((d, g) for g, d in enumerate(rows))))


def _max_partial_score(matrix: np.ndarray) -> float:
    """Best summed score of any partial matching of `matrix` (may be empty)."""
    if matrix.shape[0] == 0 or matrix.shape[1] == 0:
        return 0.0
    rows, cols = linear_sum_assignment(matrix, maximize=True)
    return float(matrix[rows, cols].sum())


def best_alignment(matrix) -> tuple[Alignment, float]:
    """Return a maximum-score maximal alignment and its score.

    Uses the Hungarian-method assignment solver; the returned score is
    exactly the brute-force maximum. Equal-score alignments are broken
    toward the lexicographically smallest pair list, which keeps snapshot
    output deterministic.
    """
    m = as_score_matrix(matrix)
    n_rows, n_cols = m.shape
    if n_rows == 0 or n_cols == 0:
        raise EmptyMatrix(f"cannot align a {n_rows}x{n_cols} matrix")

    target = _max_partial_score(m)

    # Fix rows in ascending order to the smallest column that still allows
    # the remaining rows/columns to reach the optimum. Rows may only stay
    # unmatched when there are more rows than columns.
    pairs: list[tuple[int, int]] = []
    used_cols: list[int] = []
    acc = 0.0
    skips_left = max(0, n_rows - n_cols)
    for row in range(n_rows):
        rest_rows = [r for r in range(row + 1, n_rows)]
        chosen = None
        for col in range(n_cols):
            if col in used_cols:
                continue
            rest_cols = [c for c in range(n_cols) if c != col and c not in used_cols]
            rest = _max_partial_score(m[np.ix_(rest_rows, rest_cols)]) if rest_rows else 0.0
            if acc + m[row, col] + rest >= target - _TIE_EPS:
                chosen = col
                break
        if chosen is None:
            if skips_left <= 0:
                raise AssertionError("alignment search lost optimality")
            skips_left -= 1
            continue
        pairs.append((row, chosen))
        used_cols.append(chosen)
        acc += m[row, chosen]

    alignment = Alignment(tuple(pairs))
    return alignment, alignment_score(m, alignment)
