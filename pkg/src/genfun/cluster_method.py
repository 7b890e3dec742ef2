"""
cluster_method.py: C_u and A_u assembled from the minimal cluster series.

    C_u(x, y, z) = M_u(x / (1 - y), y, z)
    A_u(x, y, z) = 1 / (1 - xy / (1 - y) - C_u(x, y, z - 1))
"""
from src.algebra import Series, TruncationSpec
from src.clusters import minimal_cluster_gf
from src.utils import pylogger
from src.utils.exceptions import PreconditionError
from src.words import Word

log = pylogger.get_pylogger(__name__)


def _check_pattern(u: Word, trunc: TruncationSpec) -> None:
    if len(u) == 0:
        raise PreconditionError("the empty pattern is not allowed")
    if u.weight > trunc.max_weight:
        log.debug(f"Pattern weight exceeds the truncation <pattern={u}, max_weight={trunc.max_weight}>")


def cluster_gf(u: Word, trunc: TruncationSpec) -> Series:
    _check_pattern(u, trunc)
    return minimal_cluster_gf(u, trunc).substitute_x_geometric()


def avoidance_gf(u: Word, trunc: TruncationSpec) -> Series:
    """A_u(x, y, 0)."""
    log.debug(f"Computing avoidance series <pattern={u}, max_weight={trunc.max_weight}>")
    clusters = cluster_gf(u, trunc).eval_z(-1)
    return (Series.letters(trunc) + clusters).quasi_inverse()


def full_gf(u: Word, trunc: TruncationSpec) -> Series:
    """A_u(x, y, z)."""
    log.debug(f"Computing occurrence series <pattern={u}, max_weight={trunc.max_weight}>")
    clusters = cluster_gf(u, trunc).shift_z_minus_one()
    return (Series.letters(trunc) + clusters).quasi_inverse()
