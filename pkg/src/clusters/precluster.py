"""
precluster.py: offset alignments of m overlapping copies of a length-k pattern.

A pre-cluster stacks m copies of the pattern, row t shifted right by offset o_t. Consecutive rows
overlap in at least one column and never start at the same column, so consecutive offsets differ
by 1 .. k-1. Column p (1-based) holds the pattern indices p - o_t of the rows covering it.
"""
import enum
import itertools
from dataclasses import dataclass
from typing import FrozenSet, Iterator, List, Sequence, Tuple

from src.utils.exceptions import PreconditionError
from src.words import Word, bounded_compositions


@dataclass(frozen=True)
class PreCluster:
    k: int
    offsets: Tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise PreconditionError(f"pattern length must be positive, got {self.k}")
        if not self.offsets or self.offsets[0] != 0:
            raise PreconditionError(f"offsets must start at 0, got {self.offsets}")
        for gap in self.gaps:
            if not 1 <= gap <= self.k - 1:
                raise PreconditionError(f"gap {gap} outside [1, {self.k - 1}] in {self.offsets}")

    @classmethod
    def from_gaps(cls, k: int, gaps: Sequence[int]) -> "PreCluster":
        return cls(k, tuple(itertools.accumulate((0,) + tuple(gaps))))

    @property
    def gaps(self) -> Tuple[int, ...]:
        return tuple(b - a for a, b in zip(self.offsets, self.offsets[1:]))

    @property
    def m(self) -> int:
        return len(self.offsets)

    @property
    def length(self) -> int:
        return self.offsets[-1] + self.k


def enumerate_preclusters(k: int, m: int) -> List[PreCluster]:
    """All m-row pre-clusters of a length-k pattern, in lexicographic gap order."""
    if k < 1 or m < 1:
        raise PreconditionError(f"need k >= 1 and m >= 1, got k={k}, m={m}")
    return [PreCluster.from_gaps(k, gaps) for gaps in itertools.product(range(1, k), repeat=m - 1)]


def enumerate_preclusters_by_length(k: int, m: int, length: int) -> List[PreCluster]:
    if k < 1 or m < 1:
        raise PreconditionError(f"need k >= 1 and m >= 1, got k={k}, m={m}")
    if length < k:
        raise PreconditionError(f"a pre-cluster is at least as long as the pattern, got {length} < {k}")
    return [
        PreCluster.from_gaps(k, gaps)
        for gaps in bounded_compositions(length - k, m - 1, 1, k - 1)
    ]


@dataclass(frozen=True)
class SymbolicCluster:
    """Column-wise index subsets of a pre-cluster; column p instantiates to max(u_i : i in I_p)."""

    k: int
    columns: Tuple[FrozenSet[int], ...]

    def instantiate(self, u: Word) -> Word:
        if len(u) != self.k:
            raise PreconditionError(f"pattern of length {len(u)} for a symbolic cluster over k={self.k}")
        return Word(max(u[i - 1] for i in column) for column in self.columns)


def symbolic_cluster(precluster: PreCluster) -> SymbolicCluster:
    k = precluster.k
    columns = tuple(
        frozenset(p - o for o in precluster.offsets if o < p <= o + k)
        for p in range(1, precluster.length + 1)
    )
    return SymbolicCluster(k, columns)


def cluster_word(u: Word, precluster: PreCluster) -> Word:
    """The minimal cluster of u on this alignment: the maximum of every column."""
    if len(u) != precluster.k:
        raise PreconditionError(f"pattern of length {len(u)} on a pre-cluster over k={precluster.k}")
    return symbolic_cluster(precluster).instantiate(u)


class ColumnKind(enum.Flag):
    """Whether a column meets the first row (TOP), the last row (BOTTOM), both, or neither."""

    MIDDLE = 0
    TOP = enum.auto()
    BOTTOM = enum.auto()


def column_heights(precluster: PreCluster) -> Tuple[int, ...]:
    return tuple(len(column) for column in symbolic_cluster(precluster).columns)


def column_kinds(precluster: PreCluster) -> Tuple[ColumnKind, ...]:
    k, last = precluster.k, precluster.offsets[-1]
    kinds = []
    for p in range(1, precluster.length + 1):
        kind = ColumnKind.MIDDLE
        if p <= k:
            kind |= ColumnKind.TOP
        if p > last:
            kind |= ColumnKind.BOTTOM
        kinds.append(kind)
    return tuple(kinds)


def iter_symbolic_clusters(k: int, m: int) -> Iterator[Tuple[PreCluster, SymbolicCluster]]:
    for precluster in enumerate_preclusters(k, m):
        yield precluster, symbolic_cluster(precluster)
