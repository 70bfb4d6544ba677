#!/usr/bin/env python3
"""Show the step-alignment machinery: optimal matching on a score matrix.

Run from the repository root: python3 demos/demo_alignment.py
"""

import numpy as np

from deriveval import alignment_score, best_alignment, enumerate_alignments

# Rows = predicted steps, columns = reference steps; entries are step
# similarities in [0, 1].  The matrix is rectangular: a 3-step prediction
# scored against a 5-step reference.
matrix = np.array([
    [0.1, 0.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 1.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, 0.0, 0.8],
])

alignment, score = best_alignment(matrix)
print("Best one-to-one alignment (row -> column):", alignment.pairs)
print(f"Alignment score (soft count of correct steps): {score:.3f}")

print("\nCross-check against exhaustive enumeration of maximal pairings:")
best = max(enumerate_alignments(3, 5), key=lambda a: alignment_score(matrix, a))
print("  enumeration best score:", f"{alignment_score(matrix, best):.3f}")

# Ties are broken deterministically: among optimal alignments the solver
# returns the lexicographically smallest column assignment.
tie = np.array([[0.5, 0.5], [0.5, 0.5]])
print("\nTie matrix -> canonical alignment:", best_alignment(tie)[0].pairs)
