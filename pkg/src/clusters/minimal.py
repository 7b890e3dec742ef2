"""
minimal.py: the minimal cluster series M_u = sum over pre-clusters of z^m x^L y^(cluster weight).
"""
from collections import defaultdict
from typing import Dict, Tuple

from src.algebra import Series, TruncationSpec, YPolynomial, ypoly
from src.clusters.precluster import cluster_word, enumerate_preclusters_by_length
from src.utils import pylogger
from src.utils.exceptions import PreconditionError
from src.words import Word

log = pylogger.get_pylogger(__name__)


def minimal_cluster_gf(u: Word, trunc: TruncationSpec) -> Series:
    """Exact M_u up to the truncation.

    Rows are appended depth first. Only the last k columns can still change when a row is added,
    so the walk carries them and the running weight instead of rebuilding cluster words. Weight
    never decreases along a walk, and length grows with the gap, which bounds both loops.
    """
    if len(u) == 0:
        raise PreconditionError("the empty pattern has no clusters")
    k, cap = len(u), trunc.max_weight
    pattern = tuple(u)
    terms: Dict[Tuple[int, int, int], int] = defaultdict(int)

    def extend(tail: Tuple[int, ...], weight: int, length: int, m: int) -> None:
        terms[(length, weight, m)] += 1
        for gap in range(1, k):
            if length + gap > cap:
                break
            head = tuple(max(tail[gap + j], pattern[j]) for j in range(k - gap))
            new_weight = weight + sum(head) - sum(tail[gap:]) + sum(pattern[k - gap :])
            if new_weight > cap:
                continue
            extend(head + pattern[k - gap :], new_weight, length + gap, m + 1)

    if u.weight <= cap and k <= cap:
        extend(pattern, u.weight, k, 1)
    else:
        log.debug(f"Pattern heavier than the truncation, M_u vanishes <pattern={u}, max_weight={cap}>")
    return Series(terms, trunc)


def mu_coefficient_poly(u: Word, n: int, m: int) -> YPolynomial:
    """[x^n z^m] M_u as an exact, untruncated polynomial in y."""
    if len(u) == 0:
        raise PreconditionError("the empty pattern has no clusters")
    if m < 1 or n < len(u):
        return ypoly({})
    coefficients: Dict[int, int] = defaultdict(int)
    for precluster in enumerate_preclusters_by_length(len(u), m, n):
        coefficients[cluster_word(u, precluster).weight] += 1
    return ypoly(coefficients)
