"""
transfer.py: A_u(x, y, z) by running the dominance automaton as a transfer system over word length.
"""
from collections import defaultdict
from typing import Dict

from src.algebra import Series, TruncationSpec
from src.automaton.dfa import DominanceAutomaton
from src.utils import pylogger
from src.utils.exceptions import PreconditionError
from src.words import Word

log = pylogger.get_pylogger(__name__)


def automaton_gf(u: Word, trunc: TruncationSpec, count_occurrences: bool = True) -> Series:
    """Sum over all words of x^|w| y^||w|| z^(occurrences).

    With `count_occurrences` false, transitions completing an occurrence are dropped, which leaves
    the avoiding words only, i.e. A_u(x, y, 0).
    """
    if len(u) == 0:
        raise PreconditionError("the empty pattern is not allowed")
    automaton = DominanceAutomaton.build(u)
    log.debug(f"Running transfer system <pattern={u}, states={len(automaton.states)}, max_weight={trunc.max_weight}>")

    steps = {}
    for c, letter_class in enumerate(automaton.classes):
        letter = Series.monomial(trunc, a=1) * letter_class.weight_series(trunc)
        steps[(c, 0)] = letter
        steps[(c, 1)] = letter * Series.monomial(trunc, c=1)

    total = Series.one(trunc)
    layer: Dict[int, Series] = {automaton.start: Series.one(trunc)}
    for _ in range(trunc.max_weight):
        following: Dict[int, Series] = defaultdict(lambda: Series.zero(trunc))
        for (state, c), (target, emit) in automaton.transitions.items():
            current = layer.get(state)
            if current is None:
                continue
            if emit and not count_occurrences:
                continue
            following[target] = following[target] + current * steps[(c, emit)]
        layer = {state: series for state, series in following.items() if series}
        if not layer:
            break
        for state in sorted(layer):
            total = total + layer[state]
    return total
