"""
gf.py: A_u(x, y, z), or A_u(x, y, 0) with z0=true, by the chosen method.
"""
from omegaconf import DictConfig

from src import utils
from src.tasks.common import dumps, read_flag, read_int, read_truncation, read_word

log = utils.get_pylogger(__name__)


@utils.task_wrapper
def gf(cfg: DictConfig) -> int:
    """Prints the generating function of a pattern.

    Args:
        cfg (DictConfig): Configuration composed by Hydra.

    Returns:
        int: Exit status.
    """

    fmt = utils.check_choice("format", cfg.format, ("text", "json"))
    pattern = read_word(cfg.pattern)
    trunc = read_truncation(cfg, pattern)

    z0 = read_flag(cfg, "z0")
    # the oracle method reads jobs through interpolation
    read_int(cfg, "jobs")

    builder = utils.instantiate_method(cfg.method, avoidance=z0)
    log.info(f"Computing series <pattern={pattern}, method={cfg.method.name}, max_weight={trunc.max_weight}, z0={z0}>")
    series = builder(pattern, trunc)

    utils.write_output(cfg, dumps(series.to_json()) if fmt == "json" else series.to_text())
    return 0
