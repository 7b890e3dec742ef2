from pathlib import Path
from typing import Iterable, Sequence, Tuple

import rich
import rich.syntax
import rich.tree
from omegaconf import DictConfig, OmegaConf
from rich import box
from rich.console import Console
from rich.table import Table

from src.utils import pylogger

log = pylogger.get_pylogger(__name__)


def print_config_tree(
    cfg: DictConfig,
    print_order: Sequence[str] = (
        "task_name",
        "method",
        "suite",
        "paths",
        "extras",
    ),
    resolve: bool = False,
    save_to_file: bool = False,
) -> None:
    """Prints content of DictConfig using Rich library and its tree structure.

    Args:
        cfg (DictConfig): Configuration composed by Hydra.
        print_order (Sequence[str], optional): Determines in what order config components are printed.
        resolve (bool, optional): Whether to resolve reference fields of DictConfig.
        save_to_file (bool, optional): Whether to export config to the output folder.
    """

    style = "dim"
    tree = rich.tree.Tree("CONFIG", style=style, guide_style=style)

    queue = []

    # add fields from `print_order` to queue
    for field in print_order:
        if field in cfg:
            queue.append(field)
        else:
            log.debug(f"Field '{field}' not found in config. Skipping '{field}' config printing...")

    # add all the other fields to queue (not specified in `print_order`)
    for field in cfg:
        if field not in queue:
            queue.append(field)

    # generate config tree from queue
    for field in queue:
        branch = tree.add(field, style=style, guide_style=style)

        config_group = cfg[field]
        if isinstance(config_group, DictConfig):
            branch_content = OmegaConf.to_yaml(config_group, resolve=resolve)
        else:
            branch_content = str(config_group)

        branch.add(rich.syntax.Syntax(branch_content, "yaml"))

    # stdout is reserved for command output
    Console(stderr=True).print(tree)

    # save config tree to file
    if save_to_file:
        output_dir = Path(cfg.paths.output_dir)
        output_dir.mkdir(parents=True, exist_ok=True)
        with open(output_dir / "config_tree.log", "w") as file:
            rich.print(tree, file=file)


def render_check_table(title: str, rows: Iterable[Tuple[str, bool, str]]) -> str:
    """Renders (name, passed, detail) rows as a plain ASCII table.

    The console has a fixed width and no colour, so identical rows always render to identical text.
    """

    table = Table(title=title, box=box.ASCII, show_lines=False)
    table.add_column("check", no_wrap=True)
    table.add_column("result", no_wrap=True)
    table.add_column("detail")
    for name, passed, detail in rows:
        table.add_row(name, "PASS" if passed else "FAIL", detail)

    console = Console(width=120, color_system=None, record=True, file=_NullFile())
    console.print(table)
    return console.export_text(styles=False).rstrip("\n")


class _NullFile:
    """Sink for the recording console; the text is exported instead of printed."""

    def write(self, _: str) -> int:
        return 0

    def flush(self) -> None:
        pass
