import itertools

import pytest

from src.algebra import Series, TruncationSpec, all_words_gf
from src.automaton import DominanceAutomaton, LetterClass, automaton_gf, letter_classes
from src.genfun import full_gf
from src.oracle import brute_force_gf, enumerate_words
from src.words import occurrence_count, reverse, words_of_weight
from tests.helpers import w


def test_letter_classes():
    assert letter_classes(w("122")) == [
        LetterClass(1, 1, (True, False, False)),
        LetterClass(2, None, (True, True, True)),
    ]
    assert letter_classes(w("1")) == [LetterClass(1, None, (True,))]
    assert [(c.lo, c.hi) for c in letter_classes(w("3123"))] == [(1, 1), (2, 2), (3, None)]
    assert [(c.lo, c.hi) for c in letter_classes(w("35"))] == [(1, 2), (3, 4), (5, None)]


def test_letter_classes_partition_the_letters():
    u = w("4131")
    classes = letter_classes(u)
    for letter in range(1, 12):
        owners = [c for c in classes if letter in c]
        assert len(owners) == 1
        assert owners[0].profile == tuple(letter >= entry for entry in u)


def test_class_weight_series():
    trunc = TruncationSpec(5)
    assert LetterClass(2, 3, (True,)).weight_series(trunc) == Series({(0, 2, 0): 1, (0, 3, 0): 1}, trunc)
    assert LetterClass(3, None, (True,)).weight_series(trunc) == Series({(0, 3, 0): 1, (0, 4, 0): 1, (0, 5, 0): 1}, trunc)


def test_states_are_reachable_subsets():
    for text in ("1", "122", "3123", "2143", "11111"):
        u = w(text)
        automaton = DominanceAutomaton.build(u)
        assert automaton.states[0] == frozenset({0})
        assert len(automaton.states) <= 2 ** (len(u) - 1)
        assert all(0 in state and max(state) <= len(u) - 1 for state in automaton.states)
        assert len(automaton.transitions) == len(automaton.states) * len(automaton.classes)


def test_counting_on_concrete_words():
    for text in ("1", "12", "122", "212", "3123", "1221"):
        u = w(text)
        automaton = DominanceAutomaton.build(u)
        for word in enumerate_words(9):
            assert automaton.count_occurrences(word) == occurrence_count(u, word)
    assert DominanceAutomaton.build(w("3123")).count_occurrences(w("1423314")) == 1
    assert DominanceAutomaton.build(w("2")).accepts(w("111"))


def test_to_json():
    dump = DominanceAutomaton.build(w("122")).to_json()
    assert dump["pattern"] == "122"
    assert dump["states"][0] == [0]
    assert dump["classes"][-1]["hi"] is None
    assert {t["emit"] for t in dump["transitions"]} == {0, 1}


def test_avoidance_examples():
    trunc = TruncationSpec(8)
    assert automaton_gf(w("2"), trunc, count_occurrences=False) == Series({(n, n, 0): 1 for n in range(9)}, trunc)
    assert automaton_gf(w("122"), trunc, count_occurrences=False).coefficient(4, 7, 0) == 13
    assert automaton_gf(w("212"), trunc, count_occurrences=False).coefficient(4, 7, 0) == 12


@pytest.mark.parametrize("text", ["1", "21", "122", "3123", "1111"])
def test_pruning_equals_z0(text):
    trunc = TruncationSpec(10)
    u = w(text)
    assert automaton_gf(u, trunc, count_occurrences=False) == automaton_gf(u, trunc).eval_z(0)
    assert automaton_gf(u, trunc).eval_z(1) == all_words_gf(trunc)


def test_reverse_gives_same_series():
    trunc = TruncationSpec(10)
    for text in ("122", "3123", "1312"):
        u = w(text)
        assert automaton_gf(reverse(u), trunc) == automaton_gf(u, trunc)


def test_three_way_agreement_small():
    trunc = TruncationSpec(10)
    for u in itertools.chain.from_iterable(words_of_weight(n) for n in range(1, 5)):
        assert full_gf(u, trunc) == automaton_gf(u, trunc) == brute_force_gf(u, trunc)


@pytest.mark.slow
def test_three_way_agreement():
    trunc = TruncationSpec(12)
    for u in itertools.chain.from_iterable(words_of_weight(n) for n in range(1, 7)):
        assert full_gf(u, trunc) == automaton_gf(u, trunc) == brute_force_gf(u, trunc, n_jobs=2)
