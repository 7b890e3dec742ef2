from omegaconf import DictConfig

from src import utils
from src.equiv import run_fixture_suite
from src.tasks.common import read_int

log = utils.get_pylogger(__name__)


@utils.task_wrapper
def verify(cfg: DictConfig) -> int:
    """Runs a fixture suite and prints a pass/fail table.

    Returns:
        int: 0 when every check passes, 1 otherwise.
    """

    log.info(f"Running fixture suite <suite={cfg.suite.name}, seed={cfg.seed}, jobs={cfg.jobs}>")
    results = run_fixture_suite(cfg.suite, jobs=read_int(cfg, "jobs"), seed=read_int(cfg, "seed"))

    table = utils.render_check_table(
        f"suite={cfg.suite.name} seed={cfg.seed}",
        [(result.name, result.passed, result.detail) for result in results],
    )
    utils.write_output(cfg, table)

    failed = [result.name for result in results if not result.passed]
    if failed:
        log.error(f"Suite failed <checks={failed}>")
        return 1
    return 0
