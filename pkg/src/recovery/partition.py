"""
partition.py: recover a pattern's sorted letters from its minimal cluster series alone.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, List

from src.algebra import YPolynomial, deriv_y_at_1, ypoly_min_degree
from src.clusters import mu_coefficient_poly
from src.recovery.matrix import recovery_matrix
from src.utils import pylogger
from src.utils.exceptions import PreconditionError, RecoveryError
from src.words import Partition, Word

log = pylogger.get_pylogger(__name__)


@dataclass(frozen=True)
class MuOracle:
    """Coefficient provider (n, m) -> [x^n z^m] M_u, with k and the lowest y-exponent of M_u."""

    k: int
    min_weight: int
    coefficient: Callable[[int, int], YPolynomial]

    @classmethod
    def from_word(cls, u: Word) -> "MuOracle":
        if len(u) == 0:
            raise PreconditionError("the empty pattern has no cluster series")
        pattern = Word(u)

        @lru_cache(maxsize=None)
        def coefficient(n: int, m: int) -> YPolynomial:
            return mu_coefficient_poly(pattern, n, m)

        # the lightest cluster is the pattern itself
        min_weight = ypoly_min_degree(coefficient(len(pattern), 1))
        return cls(len(pattern), min_weight, coefficient)


def ddagger_numeric(mu: MuOracle, i: int) -> int:
    k = mu.k
    if not 1 <= i <= k - 1:
        raise PreconditionError(f"i must lie in [1, {k - 1}], got {i}")
    combination = mu.coefficient(2 * k + i - 2, k)
    for length in range(2 * k - 2, 2 * k + i - 2):
        combination = combination - mu.coefficient(length, k - 1)
    return deriv_y_at_1(combination)


def ddagger_values(mu: MuOracle) -> List[int]:
    return [ddagger_numeric(mu, i) for i in range(1, mu.k)]


def recover_partition(mu: MuOracle) -> Partition:
    k = mu.k
    if k < 1:
        raise PreconditionError(f"k must be positive, got {k}")
    if k == 1:
        if mu.min_weight < 1:
            raise RecoveryError(f"lowest y-exponent {mu.min_weight} is not a letter")
        return Partition((mu.min_weight,))

    matrix = recovery_matrix(k)
    parts: List[int] = []
    for i, value in enumerate(ddagger_values(mu), start=1):
        rest = value - sum(matrix.entry(i, j) * parts[j - 1] for j in range(1, i))
        diagonal = matrix.entry(i, i)
        if rest % diagonal:
            raise RecoveryError(f"lambda_{i} = {rest}/{diagonal} is not an integer")
        parts.append(rest // diagonal)
    parts.append(mu.min_weight - sum(parts))

    if any(part < 1 for part in parts):
        raise RecoveryError(f"non-positive part in {parts}")
    if any(parts[j] < parts[j + 1] for j in range(k - 1)):
        raise RecoveryError(f"parts {parts} are not weakly decreasing")
    log.debug(f"Recovered partition <k={k}, parts={parts}>")
    return Partition(parts)
