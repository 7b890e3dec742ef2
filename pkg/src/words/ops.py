"""
ops.py: dominance, factor scanning and the elementary word transforms.
"""
from collections import Counter
from typing import FrozenSet

from src.utils.exceptions import PreconditionError
from src.words.word import Partition, Word


def dominates(v: Word, u: Word) -> bool:
    """True iff v and u have the same length and v_i >= u_i everywhere."""
    if len(v) != len(u):
        return False
    return all(a >= b for a, b in zip(v, u))


def em_set(u: Word, w: Word) -> FrozenSet[int]:
    """1-based start positions of the factors of w that dominate u."""
    if len(u) == 0:
        raise PreconditionError("the empty pattern has no occurrences")
    k = len(u)
    return frozenset(i + 1 for i in range(len(w) - k + 1) if dominates(w[i : i + k], u))


def occurrence_count(u: Word, w: Word) -> int:
    """Number of factors of w dominating u; a plain window scan."""
    if len(u) == 0:
        raise PreconditionError("the empty pattern has no occurrences")
    k = len(u)
    count = 0
    for i in range(len(w) - k + 1):
        for j in range(k):
            if w[i + j] < u[j]:
                break
        else:
            count += 1
    return count


def partition_of(u: Word) -> Partition:
    if len(u) == 0:
        raise PreconditionError("the empty word has no partition")
    return Partition(sorted(u, reverse=True))


def reverse(u: Word) -> Word:
    return Word(reversed(u))


def prepend_one(u: Word) -> Word:
    return Word((1,)) + u


def plus_one(u: Word) -> Word:
    return Word(entry + 1 for entry in u)


def are_rearrangements(u: Word, v: Word) -> bool:
    """Same length and the same multiset of letters."""
    return len(u) == len(v) and Counter(u) == Counter(v)
