from omegaconf import DictConfig

from src import utils
from src.clusters import minimal_cluster_gf
from src.tasks.common import dumps, read_truncation, read_word

log = utils.get_pylogger(__name__)


@utils.task_wrapper
def mu(cfg: DictConfig) -> int:
    """Prints the minimal cluster series M_u."""

    fmt = utils.check_choice("format", cfg.format, ("text", "json"))
    pattern = read_word(cfg.pattern)
    trunc = read_truncation(cfg, pattern)

    log.info(f"Computing minimal cluster series <pattern={pattern}, max_weight={trunc.max_weight}>")
    series = minimal_cluster_gf(pattern, trunc)

    utils.write_output(cfg, dumps(series.to_json()) if fmt == "json" else series.to_text())
    return 0
