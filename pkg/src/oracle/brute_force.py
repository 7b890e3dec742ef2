"""
brute_force.py: generating functions straight from the definition, by listing every word.
"""
from collections import Counter
from typing import Iterator, Tuple

from joblib import Parallel, delayed

from src.algebra import Series, TruncationSpec
from src.utils import pylogger
from src.utils.exceptions import PreconditionError
from src.words import Word, occurrence_count, words_of_weight

log = pylogger.get_pylogger(__name__)


def enumerate_words(max_weight: int) -> Iterator[Word]:
    """Every word of weight <= max_weight once, by weight, then length, then lexicographically."""
    if max_weight < 0:
        raise PreconditionError(f"max_weight must be nonnegative, got {max_weight}")
    for n in range(max_weight + 1):
        yield from words_of_weight(n)


def _words_with_first_letter(first: int, max_weight: int) -> Iterator[Tuple[int, ...]]:
    """Words starting with `first` of total weight <= max_weight, as plain tuples."""
    stack = [(first,)]
    while stack:
        word = stack.pop()
        yield word
        room = max_weight - sum(word)
        for letter in range(room, 0, -1):
            stack.append(word + (letter,))


def _tally(u: Word, first: int, max_weight: int) -> Counter:
    counts: Counter = Counter()
    for word in _words_with_first_letter(first, max_weight):
        counts[(len(word), sum(word), occurrence_count(u, word))] += 1
    return counts


def brute_force_gf(u: Word, trunc: TruncationSpec, n_jobs: int = 1) -> Series:
    """A_u(x, y, z) by scanning every word of weight <= W for dominating windows."""
    if len(u) == 0:
        raise PreconditionError("the empty pattern is not allowed")
    cap = trunc.max_weight
    log.debug(f"Enumerating words <pattern={u}, max_weight={cap}, jobs={n_jobs}>")

    # one chunk per first letter; addition is order independent
    chunks = Parallel(n_jobs=n_jobs)(delayed(_tally)(u, first, cap) for first in range(1, cap + 1))
    counts: Counter = Counter({(0, 0, 0): 1})
    for chunk in chunks:
        counts.update(chunk)
    return Series(counts, trunc)


def brute_force_avoidance_gf(u: Word, trunc: TruncationSpec, n_jobs: int = 1) -> Series:
    return brute_force_gf(u, trunc, n_jobs=n_jobs).eval_z(0)
