"""
cli.py: `factor-order <command> --flag value ... key=value ...`, one Hydra config per command.
"""
import sys
from pathlib import Path
from typing import List, Optional, Sequence

import pyrootutils
from hydra import compose, initialize_config_dir
from hydra.core.global_hydra import GlobalHydra
from hydra.errors import HydraException
from omegaconf.errors import OmegaConfBaseException

ROOT = pyrootutils.setup_root(__file__, indicator=".project-root", pythonpath=True)
# ------------------------------------------------------------------------------------ #
# the setup_root above:
# - adds the project root dir to PYTHONPATH, so `src` imports without installing
# - sets the PROJECT_ROOT environment variable used by "configs/paths/default.yaml"
# - loads environment variables from ".env" in the root dir
# ------------------------------------------------------------------------------------ #

from src import utils  # noqa: E402
from src.tasks import TASKS  # noqa: E402
from src.utils.exceptions import (  # noqa: E402
    FactorOrderError,
    PreconditionError,
    UsageError,
    WordFormatError,
)

log = utils.get_pylogger(__name__)

CONFIG_DIR = Path(ROOT) / "configs"

USAGE = """usage: factor-order <command> [--flag value ...] [key=value ...]

commands:
  gf              --pattern P --max-weight W [--method cluster|automaton|oracle] [--z0] [--format text|json]
  mu              --pattern P --max-weight W [--format text|json]
  chart           --k K --m M [--format text|json]
  recover         --pattern P
  classify        --max-factor-weight F --max-word-weight W [--jobs N] [--experiment desk_scan|full_scan]
  verify          [--suite paper] [--seed S] [--jobs N]
  automaton-dump  --pattern P

every flag is also a Hydra override: --max-weight 8 is max_weight=8, a bare --z0 is z0=true
patterns are digit strings (3123) or comma lists (10,1,2,3)"""


def _override_value(value: str) -> str:
    # hydra reads an unquoted comma list as a sweep
    if "," in value and value[:1] not in ("'", '"', "["):
        return f"'{value}'"
    return value


def flags_to_overrides(args: Sequence[str]) -> List[str]:
    """Rewrites `--max-weight 8` / `--max-weight=8` as `max_weight=8` and a bare `--z0` as `z0=true`.

    Arguments without a leading `--` are passed through as Hydra overrides.
    """

    overrides: List[str] = []
    args = list(args)
    index = 0
    while index < len(args):
        token = args[index]
        index += 1
        if not token.startswith("--"):
            overrides.append(token)
            continue

        name, sep, value = token[2:].partition("=")
        key = name.replace("-", "_")
        if not key:
            raise UsageError(f"malformed flag {token!r}")
        if not sep:
            if index < len(args) and not args[index].startswith("--"):
                value = args[index]
                index += 1
            else:
                value = "true"
        overrides.append(f"{key}={_override_value(value)}")
    return overrides


def compose_config(command: str, overrides: Sequence[str] = ()):
    config_name, _ = TASKS[command]
    GlobalHydra.instance().clear()
    with initialize_config_dir(version_base="1.3", config_dir=str(CONFIG_DIR), job_name=config_name):
        return compose(config_name=config_name, overrides=list(overrides))


def run(argv: Optional[List[str]] = None) -> int:
    """Runs one command and returns its exit status: 0 ok, 1 failed verification, 2 bad usage."""

    argv = sys.argv[1:] if argv is None else list(argv)
    utils.setup_rich_logging("INFO")

    if not argv or argv[0] in ("-h", "--help", "help"):
        print(USAGE, file=sys.stderr)
        return 0 if argv else 2

    command, args = argv[0], argv[1:]
    if command not in TASKS:
        log.error(f"Unknown command <command={command}>")
        print(USAGE, file=sys.stderr)
        return 2
    if "-h" in args or "--help" in args:
        print(USAGE, file=sys.stderr)
        return 0

    try:
        cfg = compose_config(command, flags_to_overrides(args))
    except (HydraException, OmegaConfBaseException, UsageError) as ex:
        log.error(f"Invalid arguments: {ex}")
        return 2

    utils.setup_rich_logging(cfg.get("log_level", "INFO"))
    utils.extras(cfg)

    _, task = TASKS[command]
    try:
        return task(cfg)
    except (UsageError, WordFormatError, PreconditionError, HydraException, OmegaConfBaseException):
        return 2
    except FactorOrderError:
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
