import functools

import pytest
from hydra.errors import ConfigCompositionException
from omegaconf import DictConfig, OmegaConf

from src import utils
from src.algebra import TruncationSpec
from src.tasks import TASKS
from src.words import Word


@pytest.mark.parametrize("command", sorted(TASKS))
def test_every_command_composes(compose_cfg, command):
    config_name, _ = TASKS[command]
    cfg = compose_cfg(config_name)
    assert isinstance(cfg, DictConfig)
    assert cfg.task_name == config_name
    assert cfg.extras.print_config is False
    assert "paths" in cfg


def test_unknown_keys_are_rejected(compose_cfg):
    with pytest.raises(ConfigCompositionException):
        compose_cfg("gf", ["pattern=1", "no_such_key=3"])


@pytest.mark.parametrize("method", ["cluster", "automaton", "oracle"])
def test_methods_instantiate_to_builders(compose_cfg, method):
    cfg = compose_cfg("gf", [f"method={method}", "jobs=1"])
    trunc = TruncationSpec(8)
    full = utils.instantiate_method(cfg.method)
    avoidance = utils.instantiate_method(cfg.method, avoidance=True)
    assert isinstance(full, functools.partial)
    assert full(Word.parse("122"), trunc).coefficient(4, 7, 0) == 13
    assert avoidance(Word.parse("122"), trunc).coefficient(4, 7, 0) == 13


def test_oracle_jobs_follow_top_level_jobs(compose_cfg):
    cfg = compose_cfg("gf", ["method=oracle", "jobs=3"])
    assert cfg.method.full.n_jobs == 3


@pytest.mark.parametrize("experiment, weights", [("desk_scan", (6, 14)), ("full_scan", (11, 20))])
def test_scan_presets(compose_cfg, experiment, weights):
    cfg = compose_cfg("classify", [f"experiment={experiment}"])
    assert (cfg.max_factor_weight, cfg.max_word_weight) == weights


def test_verify_defaults(compose_cfg):
    cfg = compose_cfg("verify")
    assert cfg.seed == 3407
    assert cfg.suite.name == "paper"
    assert [list(t) for t in cfg.suite.swap_triples] == [[2, 2, 2], [2, 2, 3], [3, 2, 2]]


def test_print_config_tree(compose_cfg, tmp_path, capsys):
    cfg = compose_cfg("chart", [f"paths.output_dir='{tmp_path}'"])
    OmegaConf.set_struct(cfg, False)
    utils.print_config_tree(cfg, resolve=False, save_to_file=True)
    assert (tmp_path / "config_tree.log").exists()
    assert "task_name" in capsys.readouterr().err
