import time
import warnings
from functools import wraps
from pathlib import Path
from typing import Callable, Iterable

from omegaconf import DictConfig
from omegaconf.errors import OmegaConfBaseException

from src.utils import pylogger, rich_utils
from src.utils.exceptions import PreconditionError, UsageError, WordFormatError

log = pylogger.get_pylogger(__name__)

# errors caused by the invocation rather than by the engine; logged without a traceback
_USAGE_ERRORS = (UsageError, WordFormatError, PreconditionError, OmegaConfBaseException)


def extras(cfg: DictConfig) -> None:
    """Applies optional utilities before the task is started.

    Utilities:
    - Ignoring python warnings
    - Rich config printing
    """

    # return if no `extras` config
    if not cfg.get("extras"):
        log.warning("Extras config not found! <cfg.extras=null>")
        return

    # disable python warnings
    if cfg.extras.get("ignore_warnings"):
        log.info("Disabling python warnings! <cfg.extras.ignore_warnings=True>")
        warnings.filterwarnings("ignore")

    # pretty print config tree using Rich library
    if cfg.extras.get("print_config"):
        log.info("Printing config tree with Rich! <cfg.extras.print_config=True>")
        rich_utils.print_config_tree(cfg, resolve=True, save_to_file=cfg.extras.get("save_config", False))


def task_wrapper(task_func: Callable) -> Callable:
    """Decorator that controls the failure behavior when executing a command task.

    This wrapper:
    - logs the exception (with traceback unless the invocation itself was invalid)
    - always reports elapsed time and where the payload went
    - re-raises, so `cli.run` can map the failure to an exit code

    Example:
    ```
    @utils.task_wrapper
    def gf(cfg: DictConfig) -> int:

        ...

        return 0
    ```
    """

    @wraps(task_func)
    def wrap(cfg: DictConfig) -> int:
        start = time.perf_counter()

        # execute the task
        try:
            status = task_func(cfg=cfg)

        # things to do if exception occurs
        except _USAGE_ERRORS as ex:
            log.error(f"{type(ex).__name__}: {ex}")
            raise ex
        except Exception as ex:
            log.exception("")
            raise ex

        # things to always do after either success or exception
        finally:
            log.info(f"Finished <task={cfg.get('task_name')}, seconds={time.perf_counter() - start:.2f}>")
            if cfg.get("output_file"):
                log.info(f"Output file: {cfg.output_file}")

        return status

    return wrap


def write_output(cfg: DictConfig, text: str) -> None:
    """Prints the payload to stdout and, when `output_file` is set, writes it there too."""

    print(text)
    if cfg.get("output_file"):
        path = Path(cfg.output_file)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text + "\n", encoding="ascii")


def check_choice(name: str, value: str, choices: Iterable[str]) -> str:
    """Rejects a config value outside a fixed set of choices."""

    choices = tuple(choices)
    if value not in choices:
        raise UsageError(f"{name} must be one of {', '.join(choices)}, got {value!r}")
    return value
