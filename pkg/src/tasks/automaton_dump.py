from omegaconf import DictConfig

from src import utils
from src.automaton import DominanceAutomaton
from src.tasks.common import dumps, read_word

log = utils.get_pylogger(__name__)


@utils.task_wrapper
def automaton_dump(cfg: DictConfig) -> int:
    """Prints the dominance automaton of a pattern as JSON."""

    pattern = read_word(cfg.pattern)
    automaton = DominanceAutomaton.build(pattern)
    log.info(f"Built automaton <pattern={pattern}, states={len(automaton.states)}>")

    utils.write_output(cfg, dumps(automaton.to_json()))
    return 0
