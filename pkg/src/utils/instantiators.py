from typing import Callable

import hydra
from omegaconf import DictConfig

from src.utils import pylogger
from src.utils.exceptions import UsageError

log = pylogger.get_pylogger(__name__)


def instantiate_method(method_cfg: DictConfig, avoidance: bool = False) -> Callable:
    """Instantiates the series builder of a `method` config.

    Every method config holds two partial nodes, `full` and `avoidance`, both called as
    `builder(pattern, trunc)`.
    """

    if not method_cfg:
        raise UsageError("No method config found!")

    if not isinstance(method_cfg, DictConfig):
        raise TypeError("Method config must be a DictConfig!")

    node = method_cfg.get("avoidance" if avoidance else "full")
    if not isinstance(node, DictConfig) or "_target_" not in node:
        raise UsageError(f"Method <{method_cfg.get('name')}> has no usable builder")

    log.info(f"Instantiating series builder <{node._target_}>")
    return hydra.utils.instantiate(node)
