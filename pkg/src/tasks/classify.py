from omegaconf import DictConfig

from src import utils
from src.equiv import classify as run_classify
from src.tasks.common import dumps, read_int

log = utils.get_pylogger(__name__)


@utils.task_wrapper
def classify(cfg: DictConfig) -> int:
    """Buckets all patterns up to a weight by avoidance and occurrence series and prints the report."""

    report = run_classify(
        read_int(cfg, "max_factor_weight"), read_int(cfg, "max_word_weight"), jobs=read_int(cfg, "jobs")
    )
    log.info(
        f"Equalities are relative to the truncation <max_word_weight={cfg.max_word_weight}, classes={len(report.classes)}>"
    )

    utils.write_output(cfg, dumps(report.to_json()))
    return 0
