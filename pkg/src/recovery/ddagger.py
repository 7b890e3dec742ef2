"""
ddagger.py: the signed cluster-column combination that isolates sums of the largest letters.

For a pattern of length k and 1 <= i <= k-1 the combination is

    d/dy [ [x^(2k+i-2) z^k] M_u - sum_{j=2k-2}^{2k+i-3} [x^j z^(k-1)] M_u ] at y = 1.

Differentiating y^(cluster weight) at y = 1 gives the cluster weight, a sum of column maxima
u_I, so the same combination can be tallied on index subsets without any pattern at hand.
"""
import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Container, Dict, FrozenSet, Optional

from src.clusters import (
    ColumnKind,
    column_kinds,
    enumerate_preclusters_by_length,
    subset_label,
    symbolic_cluster,
)
from src.utils.exceptions import PreconditionError, UniformityError
from src.words import Word

Subset = FrozenSet[int]


@dataclass(frozen=True)
class SignedSubsetMultiset:
    k: int
    counts: Dict[Subset, int] = field(default_factory=dict)

    def multiplicity(self, subset) -> int:
        return self.counts.get(frozenset(subset), 0)

    def support(self) -> Dict[Subset, int]:
        return {subset: count for subset, count in self.counts.items() if count}

    def evaluate(self, u: Word) -> int:
        """Sum of multiplicity(I) * max(u_i : i in I)."""
        if len(u) != self.k:
            raise PreconditionError(f"pattern of length {len(u)} for subsets of 1..{self.k}")
        return sum(count * max(u[i - 1] for i in subset) for subset, count in self.counts.items())

    def uniform_multiplicities(self, i: Optional[int] = None) -> Dict[int, int]:
        """Multiplicity per subset size h, nonzero sizes only.

        Raises UniformityError when some size class carries different multiplicities, or a
        negative one, with the offending subset and the counts seen in that class.
        """
        per_size: Dict[int, int] = {}
        for h in range(1, self.k + 1):
            seen = {
                frozenset(combo): self.multiplicity(combo)
                for combo in itertools.combinations(range(1, self.k + 1), h)
            }
            values = set(seen.values())
            if len(values) > 1:
                first = next(iter(seen.values()))
                offending = next(subset for subset, count in seen.items() if count != first)
                raise UniformityError(
                    f"size {h} not uniform <k={self.k}, i={i}, subset={subset_label(offending)}, "
                    f"counts={sorted(values)}>"
                )
            (value,) = values
            if value < 0:
                raise UniformityError(f"negative multiplicity {value} for size {h} <k={self.k}, i={i}>")
            if value:
                per_size[h] = value
        return per_size


def _check_range(k: int, i: int) -> None:
    if k < 2:
        raise PreconditionError(f"needs a pattern of length at least 2, got k={k}")
    if not 1 <= i <= k - 1:
        raise PreconditionError(f"i must lie in [1, {k - 1}], got {i}")


def ddagger_symbolic(k: int, i: int, kinds: Optional[Container[ColumnKind]] = None) -> SignedSubsetMultiset:
    """Signed tally of column subsets; `kinds` restricts the tally to columns of those kinds."""
    _check_range(k, i)
    counts: Counter = Counter()

    def tally(m: int, length: int, sign: int) -> None:
        for precluster in enumerate_preclusters_by_length(k, m, length):
            columns = symbolic_cluster(precluster).columns
            if kinds is None:
                for column in columns:
                    counts[column] += sign
            else:
                for column, kind in zip(columns, column_kinds(precluster)):
                    if kind in kinds:
                        counts[column] += sign

    tally(k, 2 * k + i - 2, +1)
    for length in range(2 * k - 2, 2 * k + i - 2):
        tally(k - 1, length, -1)
    return SignedSubsetMultiset(k, {subset: count for subset, count in counts.items() if count})
