from typing import Iterator, Optional, Tuple

from src.words.word import Word


def bounded_compositions(
    total: int, parts: int, lo: int = 1, hi: Optional[int] = None
) -> Iterator[Tuple[int, ...]]:
    """Yields the compositions of `total` into exactly `parts` parts from [lo, hi], lexicographically.

    `hi=None` leaves the parts unbounded above. Nothing is yielded when no composition exists;
    zero parts compose only zero.
    """
    if parts == 0:
        if total == 0:
            yield ()
        return
    if total < parts * lo:
        return
    if hi is not None and total > parts * hi:
        return

    top = total - (parts - 1) * lo
    if hi is not None:
        top = min(top, hi)
    for first in range(lo, top + 1):
        for rest in bounded_compositions(total - first, parts - 1, lo, hi):
            yield (first,) + rest


def words_of_weight(n: int) -> Iterator[Word]:
    """All words of weight exactly n, by length then lexicographically."""
    if n == 0:
        yield Word()
        return
    for length in range(1, n + 1):
        for parts in bounded_compositions(n, length):
            yield Word(parts)
