import numpy as np
import pyrootutils
import pytest
from hydra import compose, initialize_config_dir
from hydra.core.global_hydra import GlobalHydra

ROOT = pyrootutils.setup_root(__file__, indicator=".project-root", pythonpath=True)

from src.algebra import TruncationSpec  # noqa: E402


@pytest.fixture
def compose_cfg():
    """Composes a command config the way `cli.run` does."""

    def _compose(config_name: str, overrides=()):
        GlobalHydra.instance().clear()
        with initialize_config_dir(version_base="1.3", config_dir=str(ROOT / "configs")):
            return compose(config_name=config_name, overrides=list(overrides))

    yield _compose
    GlobalHydra.instance().clear()


@pytest.fixture
def rng():
    return np.random.default_rng(3407)


@pytest.fixture
def trunc8():
    return TruncationSpec(8)