"""
chart.py: how often each index subset I appears as a column among all symbolic m-clusters of each length.
"""
import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Tuple

import pandas as pd

from src.clusters.precluster import iter_symbolic_clusters
from src.utils.exceptions import PreconditionError

Subset = FrozenSet[int]


def subset_label(subset: Subset) -> str:
    return ",".join(str(i) for i in sorted(subset))


def ordered_subsets(k: int, max_size: int) -> List[Subset]:
    """Nonempty subsets of {1..k} of size <= max_size, by size then lexicographically."""
    return [
        frozenset(combo)
        for size in range(1, max_size + 1)
        for combo in itertools.combinations(range(1, k + 1), size)
    ]


@dataclass(frozen=True)
class Chart:
    k: int
    m: int
    rows: Dict[int, Dict[Subset, int]] = field(default_factory=dict)

    @property
    def lengths(self) -> List[int]:
        return sorted(self.rows)

    @property
    def columns(self) -> List[Subset]:
        # a column of an m-row alignment meets at most min(k, m) rows
        return ordered_subsets(self.k, min(self.k, self.m))

    def count(self, length: int, subset) -> int:
        return self.rows.get(length, {}).get(frozenset(subset), 0)

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame(
            [[self.count(length, subset) for subset in self.columns] for length in self.lengths],
            index=pd.Index(self.lengths, name="length"),
            columns=[subset_label(subset) for subset in self.columns],
        )
        return frame.astype("int64")

    def to_text(self) -> str:
        frame = self.to_frame()
        shown = frame.astype(str).where(frame != 0, "")
        return shown.reset_index().to_string(index=False)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "m": self.m,
            "rows": [
                {
                    "length": length,
                    "counts": {
                        subset_label(subset): self.count(length, subset)
                        for subset in self.columns
                        if self.count(length, subset)
                    },
                }
                for length in self.lengths
            ],
        }


def chart(k: int, m: int) -> Chart:
    if k < 2 or m < 1:
        raise PreconditionError(f"charts need k >= 2 and m >= 1, got k={k}, m={m}")
    rows: Dict[int, Counter] = defaultdict(Counter)
    for precluster, symbolic in iter_symbolic_clusters(k, m):
        rows[precluster.length].update(symbolic.columns)
    return Chart(k, m, {length: dict(counts) for length, counts in rows.items()})


def preclusters_per_length(k: int, m: int) -> Dict[int, int]:
    counts: Counter = Counter()
    for precluster, _ in iter_symbolic_clusters(k, m):
        counts[precluster.length] += 1
    return dict(counts)


def chart_row_sums(table: Chart) -> Dict[int, Tuple[int, int]]:
    """(sum of the row, length * number of pre-clusters) per length; the two always agree."""
    per_length = preclusters_per_length(table.k, table.m)
    return {
        length: (sum(table.rows[length].values()), length * per_length[length])
        for length in table.lengths
    }
