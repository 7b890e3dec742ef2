from omegaconf import DictConfig

from src import utils
from src.recovery import MuOracle, ddagger_values, recover_partition, recovery_matrix
from src.tasks.common import dumps, read_word
from src.words import partition_of

log = utils.get_pylogger(__name__)


@utils.task_wrapper
def recover(cfg: DictConfig) -> int:
    """Recovers the sorted letters of a pattern using only its minimal cluster coefficients."""

    pattern = read_word(cfg.pattern)
    oracle = MuOracle.from_word(pattern)

    log.info(f"Recovering partition from cluster coefficients <pattern={pattern}, k={oracle.k}>")
    parts = recover_partition(oracle)
    matrix = recovery_matrix(oracle.k).to_json() if oracle.k >= 2 else []
    values = ddagger_values(oracle) if oracle.k >= 2 else []

    if parts != partition_of(pattern):
        log.warning(f"Recovered partition differs from the sorted pattern <recovered={list(parts)}>")

    utils.write_output(cfg, dumps({"k": oracle.k, "lambda": list(parts), "matrix": matrix, "ddagger": values}))
    return 0
