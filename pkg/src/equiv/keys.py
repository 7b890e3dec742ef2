import hashlib

from src.algebra import TruncationSpec
from src.clusters import minimal_cluster_gf
from src.genfun import avoidance_gf, full_gf
from src.words import Word


def wilf_key(u: Word, trunc: TruncationSpec) -> str:
    """Canonical text of A_u(x, y, 0); equal keys mean indistinguishable up to weight W."""
    return avoidance_gf(u, trunc).to_text()


def strong_key(u: Word, trunc: TruncationSpec) -> str:
    """Canonical text of A_u(x, y, z)."""
    return full_gf(u, trunc).to_text()


def key_hash(key: str) -> str:
    return hashlib.sha256(key.encode("ascii")).hexdigest()


def wilf_necessary_conditions(u: Word, v: Word) -> bool:
    """Same length and weight, read from the lowest x- and y-exponents of the cluster series."""
    trunc = TruncationSpec(max(u.weight, v.weight, 1))
    mu, mv = minimal_cluster_gf(u, trunc), minimal_cluster_gf(v, trunc)
    return mu.min_degree("x") == mv.min_degree("x") and mu.min_degree("y") == mv.min_degree("y")
