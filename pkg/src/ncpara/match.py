"""Fuzzy word matching and n-gram overlap between two paraphrases.

A pair of words scores 1.0 when identical, and ``(2|P| / (|a| + |b|))**2``
when they differ but share a common prefix ``P`` of at least three
characters. Two n-grams of equal length match only if every aligned word
pair scores above zero; their score is the sum of the word scores.

The overlap of a test paraphrase against a gold one sums, over every
contiguous n-gram of the test paraphrase, the best score achievable against
any same-length gold n-gram. Normalizing by the larger of the two
self-overlaps yields a similarity in [0, 1].
"""

import os
from typing import Optional, Sequence

from .errors import EmptyInputError

MIN_PREFIX = 3


def common_prefix_length(a: str, b: str) -> int:
    return len(os.path.commonprefix([a, b]))


def word_match(w_gold: str, w_test: str) -> float:
    """Similarity of two normalized words.

    >>> round(word_match("cutting", "cuts"), 4)
    0.2975
    >>> word_match("cat", "car")
    0.0
    """
    if w_gold == w_test:
        return 1.0
    p = common_prefix_length(w_gold, w_test)
    if p < MIN_PREFIX:
        return 0.0
    return (2.0 * p / (len(w_gold) + len(w_test))) ** 2


def ngram_match(g: Sequence[str], t: Sequence[str]) -> Optional[float]:
    """Positionwise sum of word matches, or None if any position fails."""
    if len(g) != len(t):
        raise ValueError("n-gram length mismatch: {} vs {}".format(len(g), len(t)))
    total = 0.0
    for gw, tw in zip(g, t):
        s = word_match(gw, tw)
        if s <= 0.0:
            return None
        total += s
    return total


def best_ngram_match(ngram: Sequence[str], gold: Sequence[str]):
    """Return ``(start, score)`` of the best-matching gold n-gram, or None.

    Equal scores resolve to the leftmost gold position.
    """
    n = len(ngram)
    best = None
    for start in range(len(gold) - n + 1):
        s = ngram_match(gold[start:start + n], ngram)
        if s is not None and (best is None or s > best[1]):
            best = (start, s)
    return best


def overlap_score(test: Sequence[str], gold: Sequence[str]) -> float:
    if not test:
        raise EmptyInputError("test paraphrase is empty")
    test = tuple(test)
    gold = tuple(gold)
    lt, lg = len(test), len(gold)
    scores = [[word_match(g, t) for g in gold] for t in test]

    # best[i][n-1]: best score of the test n-gram starting at i; n-grams
    # grow one word at a time from every (test, gold) start pair and stop
    # at the first zero, so longer n-grams reuse the shorter prefix sums
    best = [[0.0] * (lt - i) for i in range(lt)]
    for i in range(lt):
        row = best[i]
        for j in range(lg):
            acc = 0.0
            for k in range(min(lt - i, lg - j)):
                w = scores[i + k][j + k]
                if w <= 0.0:
                    break
                acc += w
                if acc > row[k]:
                    row[k] = acc
    total = 0.0
    for n in range(1, lt + 1):
        for i in range(lt - n + 1):
            total += best[i][n - 1]
    return total


def self_score(seq: Sequence[str]) -> float:
    if not seq:
        raise EmptyInputError("paraphrase is empty")
    return overlap_score(seq, seq)


def normalized_overlap(test: Sequence[str], gold: Sequence[str]) -> float:
    """Overlap of ``test`` against ``gold`` divided by the larger self-score.

    Returns 0.0 when either side is empty (e.g. a paraphrase made only of
    determiners); callers wanting a diagnostic check emptiness themselves.
    The direction matters: the sum runs over the n-grams of ``test``.
    """
    if not test or not gold:
        return 0.0
    denom = max(self_score(test), self_score(gold))
    return overlap_score(test, gold) / denom
