"""
classify.py: bucket every pattern up to a given weight by its avoidance and occurrence series.

Equal truncated series only mean "indistinguishable up to weight W"; different series at any W
separate two patterns for good.
"""
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import pandas as pd
from joblib import Parallel, delayed

from src.algebra import TruncationSpec
from src.equiv.keys import key_hash, strong_key, wilf_key, wilf_necessary_conditions
from src.utils import pylogger
from src.utils.exceptions import PreconditionError
from src.words import Word, are_rearrangements, partition_of, words_of_weight

log = pylogger.get_pylogger(__name__)


@dataclass
class EquivalenceReport:
    max_word_weight: int
    max_factor_weight: int
    population: int
    # one entry per occurrence (strong) class, in order of first member
    classes: List[dict] = field(default_factory=list)
    wilf_strong_mismatches: List[dict] = field(default_factory=list)
    rearrangement_violations: List[dict] = field(default_factory=list)
    strong_within_wilf: bool = True
    necessary_condition_violations: List[List[str]] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return (
            not self.wilf_strong_mismatches
            and not self.rearrangement_violations
            and self.strong_within_wilf
            and not self.necessary_condition_violations
        )

    def to_json(self) -> dict:
        return {
            "W": self.max_word_weight,
            "max_factor_weight": self.max_factor_weight,
            "classes": self.classes,
            "wilf_strong_mismatches": self.wilf_strong_mismatches,
            "rearrangement_violations": self.rearrangement_violations,
        }


def population(max_factor_weight: int) -> List[Word]:
    """All patterns of weight 1..F, by weight, then length, then lexicographically."""
    return [u for n in range(1, max_factor_weight + 1) for u in words_of_weight(n)]


def _keys(u: Word, trunc: TruncationSpec) -> Tuple[str, str]:
    return key_hash(wilf_key(u, trunc)), key_hash(strong_key(u, trunc))


def classify(
    max_factor_weight: int, max_word_weight: int, jobs: int = 1, patterns: Optional[List[Word]] = None
) -> EquivalenceReport:
    if max_factor_weight > max_word_weight:
        raise PreconditionError(
            f"max_factor_weight {max_factor_weight} exceeds max_word_weight {max_word_weight}"
        )
    trunc = TruncationSpec(max_word_weight)
    patterns = population(max_factor_weight) if patterns is None else list(patterns)
    log.info(
        f"Classifying patterns <count={len(patterns)}, max_factor_weight={max_factor_weight}, "
        f"max_word_weight={max_word_weight}, jobs={jobs}>"
    )

    keys = Parallel(n_jobs=jobs)(delayed(_keys)(u, trunc) for u in patterns)
    frame = pd.DataFrame(
        {
            "order": range(len(patterns)),
            "word": [str(u) for u in patterns],
            "wilf": [wilf for wilf, _ in keys],
            "strong": [strong for _, strong in keys],
        }
    )

    report = EquivalenceReport(max_word_weight, max_factor_weight, len(patterns))

    for _, group in frame.groupby("strong", sort=False):
        members = [patterns[i] for i in sorted(group["order"])]
        wilf_hashes = group["wilf"].unique()
        if len(wilf_hashes) > 1:
            report.strong_within_wilf = False
        partitions = {partition_of(u) for u in members}
        report.classes.append(
            {
                "members": [str(u) for u in members],
                "partition": list(partitions.pop()) if len(partitions) == 1 else None,
                "wilf_hash": wilf_hashes[0],
                "strong_hash": group["strong"].iloc[0],
            }
        )

    for wilf, group in frame.groupby("wilf", sort=False):
        members = [patterns[i] for i in sorted(group["order"])]
        strong_classes = [
            list(sub.sort_values("order")["word"]) for _, sub in group.groupby("strong", sort=False)
        ]
        if len(strong_classes) > 1:
            report.wilf_strong_mismatches.append({"wilf_hash": wilf, "strong_classes": strong_classes})
        if not all(are_rearrangements(members[0], u) for u in members[1:]):
            report.rearrangement_violations.append(
                {
                    "members": [str(u) for u in members],
                    "partitions": [list(p) for p in sorted({tuple(partition_of(u)) for u in members})],
                }
            )
        for u in members[1:]:
            if not wilf_necessary_conditions(members[0], u):
                report.necessary_condition_violations.append([str(members[0]), str(u)])

    if report.clean:
        log.info(f"Scan found no conjecture violations up to weight {max_word_weight} <classes={len(report.classes)}>")
    else:
        log.warning(
            f"Scan flagged classes <mismatches={len(report.wilf_strong_mismatches)}, "
            f"rearrangement_violations={len(report.rearrangement_violations)}>"
        )
    return report
