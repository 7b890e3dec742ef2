from omegaconf import DictConfig

from src import utils
from src.clusters import chart as build_chart
from src.tasks.common import dumps, read_int

log = utils.get_pylogger(__name__)


@utils.task_wrapper
def chart(cfg: DictConfig) -> int:
    """Prints the column-subset chart of all symbolic m-clusters of a length-k pattern."""

    fmt = utils.check_choice("format", cfg.format, ("text", "json"))
    log.info(f"Tallying symbolic clusters <k={cfg.k}, m={cfg.m}>")
    table = build_chart(read_int(cfg, "k"), read_int(cfg, "m"))

    utils.write_output(cfg, dumps(table.to_json()) if fmt == "json" else table.to_text())
    return 0
