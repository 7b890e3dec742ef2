"""
letters.py: compress the positive integers into the finitely many letter classes a pattern can tell apart.
"""
from dataclasses import dataclass
from typing import List, Optional, Tuple

from src.algebra import Series, TruncationSpec
from src.utils.exceptions import PreconditionError
from src.words import Word


@dataclass(frozen=True)
class LetterClass:
    """Letters lo..hi (hi=None: unbounded); profile[j] says whether they are >= u_{j+1}."""

    lo: int
    hi: Optional[int]
    profile: Tuple[bool, ...]

    def __contains__(self, letter: int) -> bool:
        return self.lo <= letter and (self.hi is None or letter <= self.hi)

    def weight_series(self, trunc: TruncationSpec) -> Series:
        """y^lo + ... + y^hi, truncated."""
        top = trunc.max_weight if self.hi is None else min(self.hi, trunc.max_weight)
        return Series({(0, b, 0): 1 for b in range(self.lo, top + 1)}, trunc)


def letter_classes(u: Word) -> List[LetterClass]:
    if len(u) == 0:
        raise PreconditionError("the empty pattern has no letter classes")
    starts = sorted(set(u) | {1})
    classes = []
    for index, lo in enumerate(starts):
        hi = starts[index + 1] - 1 if index + 1 < len(starts) else None
        classes.append(LetterClass(lo, hi, tuple(lo >= entry for entry in u)))
    return classes


def class_of(classes: List[LetterClass], letter: int) -> int:
    for index, letter_class in enumerate(classes):
        if letter in letter_class:
            return index
    raise PreconditionError(f"letter {letter} is not a positive integer")
