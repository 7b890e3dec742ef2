"""
fixture_suite.py: the published fixtures, run end to end through every engine component.
"""
import time
from dataclasses import dataclass
from typing import Callable, List, Mapping, Tuple

import numpy as np

from src.algebra import TruncationSpec, all_words_gf
from src.automaton import automaton_gf
from src.clusters import chart, enumerate_preclusters
from src.equiv.classify import classify, population
from src.equiv.fixtures import (
    A_122,
    AVOIDANCE_COEFFICIENTS,
    CHART_COLUMNS,
    PUBLISHED_CHARTS,
    PRECLUSTER_COUNTS,
    RATIONAL_FIXTURES,
    verify_rational,
)
from src.equiv.identities import check_axbyc, check_prop_we1, check_theorem_we3
from src.genfun import avoidance_gf, full_gf
from src.oracle import brute_force_gf
from src.recovery import MuOracle, ddagger_values, recover_partition, recovery_matrix
from src.utils import pylogger
from src.words import Word, partition_of

log = pylogger.get_pylogger(__name__)

Outcome = Tuple[bool, str]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def _coefficients(params: Mapping, jobs: int) -> Outcome:
    trunc = TruncationSpec(params["coefficient_max_weight"])
    seen = []
    for text, expected in AVOIDANCE_COEFFICIENTS.items():
        u = Word.parse(text)
        values = (
            avoidance_gf(u, trunc).coefficient(4, 7, 0),
            automaton_gf(u, trunc, count_occurrences=False).coefficient(4, 7, 0),
            brute_force_gf(u, trunc, n_jobs=jobs).coefficient(4, 7, 0),
        )
        seen.append((text, values, expected))
    passed = all(value == expected for _, values, expected in seen for value in values)
    return passed, "; ".join(f"{text}: {'/'.join(map(str, values))}" for text, values, _ in seen)


def _rational(params: Mapping, jobs: int) -> Outcome:
    trunc = TruncationSpec(params["rational_max_weight"])
    results = {text: verify_rational(fixture, trunc) for text, fixture in RATIONAL_FIXTURES.items()}
    # the 122 closed form must not fit the 212 series
    control = verify_rational(A_122, trunc, avoidance_gf(Word.parse("212"), trunc))
    passed = all(results.values()) and not control
    return passed, ", ".join(f"{text}={ok}" for text, ok in results.items()) + f", control={control}"


def _charts(params: Mapping, jobs: int) -> Outcome:
    bad = []
    for m, rows in PUBLISHED_CHARTS.items():
        table = chart(params["chart_k"], m)
        if sorted(rows) != table.lengths:
            bad.append(f"m={m} lengths")
            continue
        for length, expected in rows.items():
            actual = [table.count(length, map(int, label.split(","))) for label in CHART_COLUMNS]
            if actual != expected:
                bad.append(f"m={m} L={length}")
    return not bad, "all cells match" if not bad else "mismatch at " + ", ".join(bad)


def _cluster_counts(params: Mapping, jobs: int) -> Outcome:
    counts = {m: len(enumerate_preclusters(params["chart_k"], m)) for m in PRECLUSTER_COUNTS}
    return counts == PRECLUSTER_COUNTS, " ".join(f"m={m}:{n}" for m, n in counts.items())


def _recovery(params: Mapping, jobs: int, seed: int) -> Outcome:
    matrix = recovery_matrix(4)
    values = ddagger_values(MuOracle.from_word(Word.parse("3123")))
    ok = matrix.to_json() == [[1], [3, 1], [6, 3, 1]] and values == [3, 12, 29]

    rng = np.random.default_rng(seed)
    failures = []
    for _ in range(params["recovery_samples"]):
        length = int(rng.integers(1, params["recovery_max_length"] + 1))
        u = Word(int(e) for e in rng.integers(1, params["recovery_max_letter"] + 1, size=length))
        if recover_partition(MuOracle.from_word(u)) != partition_of(u):
            failures.append(str(u))
    detail = f"matrix={matrix.to_json()} ddagger(3123)={values} round-trip failures={len(failures)}"
    return ok and not failures, detail


def _word_transforms(params: Mapping, jobs: int) -> Outcome:
    trunc = TruncationSpec(params["transform_max_weight"])
    failed = []
    for u in population(params["transform_max_pattern_weight"]):
        report = check_prop_we1(u, None, trunc)
        if not report.passed:
            failed.append(f"{u}:{','.join(report.failures())}")
    return not failed, "all identities hold" if not failed else " ".join(failed)


def _swaps(params: Mapping, jobs: int) -> Outcome:
    trunc = TruncationSpec(params["swap_max_weight"])
    results = {tuple(t): check_theorem_we3(*t, trunc) for t in params["swap_triples"]}
    results.update({tuple(t): check_axbyc(*t, trunc) for t in params["axbyc_tuples"]})
    passed = all(results.values())
    return passed, " ".join(f"{''.join(map(str, t))}={ok}" for t, ok in results.items())


def _three_way(params: Mapping, jobs: int, seed: int) -> Outcome:
    trunc = TruncationSpec(params["three_way_max_weight"])
    candidates = population(params["three_way_pattern_weight"])
    rng = np.random.default_rng(seed)
    picks = rng.choice(len(candidates), size=min(params["three_way_samples"], len(candidates)), replace=False)
    mismatched, collapsed = [], []
    everything = all_words_gf(trunc)
    for index in sorted(int(i) for i in picks):
        u = candidates[index]
        cluster_series = full_gf(u, trunc)
        if not cluster_series == automaton_gf(u, trunc) == brute_force_gf(u, trunc, n_jobs=jobs):
            mismatched.append(str(u))
        if cluster_series.eval_z(1) != everything:
            collapsed.append(str(u))
    detail = f"{len(picks)} patterns, mismatches={mismatched}, z=1 failures={collapsed}"
    return not mismatched and not collapsed, detail


def _classify(params: Mapping, jobs: int) -> Outcome:
    report = classify(params["classify_max_factor_weight"], params["classify_max_word_weight"], jobs=jobs)
    lookup = {member: index for index, cls in enumerate(report.classes) for member in cls["members"]}
    separated = lookup.get("122") != lookup.get("212")
    detail = (
        f"classes={len(report.classes)} mismatches={len(report.wilf_strong_mismatches)} "
        f"violations={len(report.rearrangement_violations)} 122/212 separated={separated}"
    )
    return report.clean and separated, detail


def run_fixture_suite(params: Mapping, jobs: int = 1, seed: int = 3407) -> List[CheckResult]:
    checks: List[Tuple[str, Callable[[], Outcome]]] = [
        ("coefficients 122/212", lambda: _coefficients(params, jobs)),
        ("rational cross-multiplication", lambda: _rational(params, jobs)),
        ("charts k=4 m=2..4", lambda: _charts(params, jobs)),
        ("pre-cluster counts", lambda: _cluster_counts(params, jobs)),
        ("recovery", lambda: _recovery(params, jobs, seed)),
        ("word-transform identities", lambda: _word_transforms(params, jobs)),
        ("a1b2c / axbyc", lambda: _swaps(params, jobs)),
        ("three-way agreement", lambda: _three_way(params, jobs, seed)),
        ("classification scan", lambda: _classify(params, jobs)),
    ]
    results = []
    for name, check in checks:
        start = time.perf_counter()
        log.info(f"Running check <name={name}>")
        passed, detail = check()
        results.append(CheckResult(name, passed, detail, time.perf_counter() - start))
        if not passed:
            log.warning(f"Check failed <name={name}, detail={detail}>")
    return results


