"""
matrix.py: the lower-triangular system linking the combination values to the sorted letters.

Summing u_I over all subsets of one size h is tie-safe:
    sum_{|I| = h} u_I = sum_j C(k - j, h - 1) lambda_j
since the subsets whose maximum is the j-th largest letter pick h - 1 of the k - j smaller ones.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Tuple

from scipy.special import comb

from src.recovery.ddagger import ddagger_symbolic
from src.utils import pylogger
from src.utils.exceptions import PreconditionError, UniformityError

log = pylogger.get_pylogger(__name__)


@dataclass(frozen=True)
class RecoveryMatrix:
    k: int
    # rows[i-1][j-1] = a_{i,j} for j <= i
    rows: Tuple[Tuple[int, ...], ...]
    # multiplicities[i-1] = ((h, c_h), ...) read off the combination for that i
    multiplicities: Tuple[Tuple[Tuple[int, int], ...], ...]

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1] if j <= i else 0

    def to_json(self) -> list:
        return [list(row) for row in self.rows]


@lru_cache(maxsize=None)
def recovery_matrix(k: int) -> RecoveryMatrix:
    if k < 2:
        raise PreconditionError(f"the recovery matrix needs k >= 2, got {k}")
    rows, multiplicities = [], []
    for i in range(1, k):
        per_size: Dict[int, int] = ddagger_symbolic(k, i).uniform_multiplicities(i)
        full = [sum(c * comb(k - j, h - 1, exact=True) for h, c in per_size.items()) for j in range(1, k + 1)]
        if any(full[j - 1] for j in range(i + 1, k + 1)):
            raise UniformityError(f"row {i} reaches past the diagonal <k={k}, row={full}>")
        if full[i - 1] < 1:
            raise UniformityError(f"row {i} has no positive diagonal entry <k={k}, row={full}>")
        rows.append(tuple(full[:i]))
        multiplicities.append(tuple(sorted(per_size.items())))
    log.debug(f"Derived recovery matrix <k={k}, rows={rows}>")
    return RecoveryMatrix(k, tuple(rows), tuple(multiplicities))
