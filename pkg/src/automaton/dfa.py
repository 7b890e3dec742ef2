"""
dfa.py: deterministic automaton for dominance matching.

A state is the set of partial-match lengths still alive (0 is always alive). Reading a letter
extends length j to j+1 when the letter dominates u_{j+1}; reaching length k emits one
occurrence and is not kept, since no longer match exists.
"""
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple

from src.automaton.letters import LetterClass, class_of, letter_classes
from src.utils import pylogger
from src.words import Word

log = pylogger.get_pylogger(__name__)

State = FrozenSet[int]


@dataclass(frozen=True)
class DominanceAutomaton:
    pattern: Word
    classes: Tuple[LetterClass, ...]
    states: Tuple[State, ...]
    # (state index, class index) -> (next state index, emitted occurrences)
    transitions: Dict[Tuple[int, int], Tuple[int, int]]

    @property
    def k(self) -> int:
        return len(self.pattern)

    @property
    def start(self) -> int:
        return 0

    @classmethod
    def build(cls, u: Word) -> "DominanceAutomaton":
        classes = tuple(letter_classes(u))
        k = len(u)
        start: State = frozenset({0})
        index: Dict[State, int] = {start: 0}
        order: List[State] = [start]
        transitions: Dict[Tuple[int, int], Tuple[int, int]] = {}

        queue = deque([start])
        while queue:
            state = queue.popleft()
            for c, letter_class in enumerate(classes):
                profile = letter_class.profile
                target = frozenset({0} | {j + 1 for j in state if j + 1 <= k - 1 and profile[j]})
                emit = int((k - 1) in state and profile[k - 1])
                if target not in index:
                    index[target] = len(order)
                    order.append(target)
                    queue.append(target)
                transitions[(index[state], c)] = (index[target], emit)

        log.debug(f"Built dominance automaton <pattern={u}, states={len(order)}, classes={len(classes)}>")
        return cls(u, classes, tuple(order), transitions)

    def step(self, state: int, letter: int) -> Tuple[int, int]:
        return self.transitions[(state, class_of(list(self.classes), letter))]

    def count_occurrences(self, word: Word) -> int:
        """Runs the automaton over a concrete word and counts emissions."""
        state, total = self.start, 0
        for letter in word:
            state, emit = self.step(state, letter)
            total += emit
        return total

    def accepts(self, word: Word) -> bool:
        """True iff the word avoids the pattern."""
        return self.count_occurrences(word) == 0

    def to_json(self) -> dict:
        return {
            "pattern": str(self.pattern),
            "k": self.k,
            "classes": [
                {"lo": c.lo, "hi": c.hi, "profile": [int(bit) for bit in c.profile]} for c in self.classes
            ],
            "states": [sorted(state) for state in self.states],
            "start": self.start,
            "transitions": [
                {"from": s, "class": c, "to": target, "emit": emit}
                for (s, c), (target, emit) in sorted(self.transitions.items())
            ],
        }
