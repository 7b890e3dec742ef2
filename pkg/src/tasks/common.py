import json
from typing import Any

from omegaconf import DictConfig, ListConfig

from src.algebra import TruncationSpec
from src.utils import pylogger
from src.utils.exceptions import UsageError
from src.words import Word

log = pylogger.get_pylogger(__name__)


def read_word(value: Any) -> Word:
    """A pattern from the config: "3123", 3123 (hydra reads digits as an int), '10,1,2,3' or [10,1,2,3]."""
    if isinstance(value, (ListConfig, list, tuple)):
        return Word(int(entry) for entry in value)
    word = Word.parse(value)
    if not word:
        raise UsageError("pattern must not be empty")
    return word


def read_int(cfg: DictConfig, key: str) -> int:
    """An integer config value; hydra hands over "8" unquoted as 8, quoted or odd input as a string."""
    value = cfg[key]
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    if isinstance(value, str):
        try:
            return int(value)
        except ValueError:
            pass
    raise UsageError(f"{key} must be an integer, got {value!r}")


def read_flag(cfg: DictConfig, key: str) -> bool:
    value = cfg[key]
    if not isinstance(value, bool):
        raise UsageError(f"{key} must be true or false, got {value!r}")
    return value


def read_truncation(cfg: DictConfig, pattern: Word = None) -> TruncationSpec:
    trunc = TruncationSpec(read_int(cfg, "max_weight"))
    if pattern is not None and pattern.weight > trunc.max_weight:
        log.warning(
            "max_weight is below the pattern weight, occurrences are invisible "
            f"<pattern={pattern}, max_weight={trunc.max_weight}>"
        )
    return trunc


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=False, separators=(",", ":"))
