"""Phrase-level similarity: normalized Levenshtein over Unicode scalars.

Similarity is 1 - distance / max(len(a), len(b)) after case folding
(lowercasing by default, configurable off). Both-empty compares as 1.
"""

from __future__ import annotations


def levenshtein_distance(a: str, b: str) -> int:
    """Minimum number of single-character insertions, deletions, and
    substitutions transforming `a` into `b`."""
    if a == b:
        return 0
    if not a:
        return len(b)
    if not b:
        return len(a)
    # Two-row DP; rows indexed by characters of b.
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        curr = [i] + [0] * len(b)
        for j, cb in enumerate(b, start=1):
            cost = 0 if ca == cb else 1
            curr[j] = min(prev[j] + 1, curr[j - 1] + 1, prev[j - 1] + cost)
        prev = curr
    return prev[-1]


def phrase_similarity(a: str, b: str, fold_case: bool = True) -> float:
    """Normalized Levenshtein similarity in [0, 1].

    Returns 1.0 when both phrases are empty (continuity choice; validated
    data never hits this case).
    """
    if fold_case:
        a = a.lower()
        b = b.lower()
    longest = max(len(a), len(b))
    if longest == 0:
        return 1.0
    return 1.0 - levenshtein_distance(a, b) / longest
