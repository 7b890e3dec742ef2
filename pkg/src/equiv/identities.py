"""
identities.py: word-transform identities and equivalence theorems, checked as truncated series equalities.
"""
from dataclasses import dataclass, field
from typing import Dict, Optional

from src.algebra import Series, TruncationSpec
from src.clusters import minimal_cluster_gf
from src.equiv.keys import strong_key
from src.genfun import plus_transform, prepend_transform, unplus_transform
from src.utils.exceptions import PreconditionError
from src.words import Word, plus_one, prepend_one, reverse


@dataclass
class IdentityReport:
    pattern: str
    other: Optional[str]
    max_weight: int
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def failures(self):
        return [name for name, ok in self.checks.items() if not ok]


def _reachable(mu: Series) -> Series:
    """The part of M_u still determined after x -> xy and back at this truncation."""
    cap = mu.trunc.max_weight
    return mu.filtered(lambda a, b, c: a + b <= cap)


def check_prop_we1(u: Word, v: Optional[Word], trunc: TruncationSpec) -> IdentityReport:
    """Reverse, 1u and u+ identities for u; with v, also the equivalence-transfer statements."""
    report = IdentityReport(str(u), None if v is None else str(v), trunc.max_weight)

    mu = minimal_cluster_gf(u, trunc)
    mu_plus = minimal_cluster_gf(plus_one(u), trunc)
    mu_one = minimal_cluster_gf(prepend_one(u), trunc)
    report.checks["reverse"] = minimal_cluster_gf(reverse(u), trunc) == mu
    report.checks["prepend_one"] = mu_one == prepend_transform(mu)
    report.checks["plus_one"] = mu_plus == plus_transform(mu)
    report.checks["unplus"] = unplus_transform(mu_plus) == _reachable(mu)

    if v is not None:
        mv = minimal_cluster_gf(v, trunc)
        mv_plus = minimal_cluster_gf(plus_one(v), trunc)
        mv_one = minimal_cluster_gf(prepend_one(v), trunc)
        same = mu == mv
        # M_{1u} up to weight W pins down M_u up to weight W - 1 and no further
        lighter = trunc.max_weight - 1
        same_lighter = mu.filtered(lambda a, b, c: b <= lighter) == mv.filtered(lambda a, b, c: b <= lighter)
        report.checks["transfer_prepend"] = same_lighter == (mu_one == mv_one)
        report.checks["transfer_plus"] = (not same) or mu_plus == mv_plus
        report.checks["transfer_unplus"] = (mu_plus != mv_plus) or _reachable(mu) == _reachable(mv)
    return report


def a1b2c_pair(a: int, b: int, c: int):
    if min(a, b, c) < 2:
        raise PreconditionError(f"a, b, c must all be at least 2, got {(a, b, c)}")
    return Word((a, 1, b, 2, c)), Word((a, 2, b, 1, c))


def check_theorem_we3(a: int, b: int, c: int, trunc: TruncationSpec) -> bool:
    """a1b2c and a2b1c have the same occurrence series."""
    left, right = a1b2c_pair(a, b, c)
    return strong_key(left, trunc) == strong_key(right, trunc)


def axbyc_pair(a: int, x: int, b: int, y: int, c: int):
    if min(a, x, b, y, c) < 1:
        raise PreconditionError(f"letters must be positive, got {(a, x, b, y, c)}")
    if min(a, b, c) < max(x, y):
        raise PreconditionError(f"need min(a, b, c) >= max(x, y), got {(a, x, b, y, c)}")
    return Word((a, x, b, y, c)), Word((a, y, b, x, c))


def check_axbyc(a: int, x: int, b: int, y: int, c: int, trunc: TruncationSpec) -> bool:
    left, right = axbyc_pair(a, x, b, y, c)
    return strong_key(left, trunc) == strong_key(right, trunc)
