import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.utils.exceptions import FactorOrderError, PreconditionError, WordFormatError
from src.words import (
    Partition,
    Word,
    are_rearrangements,
    bounded_compositions,
    dominates,
    em_set,
    occurrence_count,
    partition_of,
    plus_one,
    prepend_one,
    reverse,
    words_of_weight,
)
from tests.helpers import w

words = st.lists(st.integers(min_value=1, max_value=6), max_size=8).map(Word)
patterns = st.lists(st.integers(min_value=1, max_value=4), min_size=1, max_size=4).map(Word)


def test_parse_and_print():
    assert w("3123") == Word((3, 1, 2, 3))
    assert w("10,1,2,3") == Word((10, 1, 2, 3))
    assert str(Word((10, 1, 2, 3))) == "10,1,2,3"
    assert str(w("3123")) == "3123"
    assert w("") == Word()
    assert Word.parse(122) == w("122")


@pytest.mark.parametrize("text", ["102", "1,0,2", "a1", "1,,2", "-1,2"])
def test_parse_rejects_bad_words(text):
    with pytest.raises(WordFormatError):
        Word.parse(text)


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        Word((1, 0))
    assert issubclass(WordFormatError, FactorOrderError)


def test_length_and_weight():
    u = w("3123")
    assert (u.length, u.weight) == (4, 9)
    assert (Word().length, Word().weight) == (0, 0)


def test_dominates_examples():
    assert dominates(w("4233"), w("3123"))
    assert not dominates(w("122"), w("212"))
    assert not dominates(w("12"), w("1"))
    assert dominates(Word(), Word())


def test_em_set_examples():
    assert em_set(w("3123"), w("1423314")) == {2}
    assert em_set(w("2"), w("111")) == frozenset()
    assert em_set(w("122"), Word()) == frozenset()
    with pytest.raises(PreconditionError):
        em_set(Word(), w("12"))


def test_occurrence_count_examples():
    assert occurrence_count(w("3123"), w("1423314")) == 1
    assert occurrence_count(w("1"), w("5213")) == 4
    assert occurrence_count(w("122"), w("133")) == 1


def test_partition_of():
    assert partition_of(w("3123")) == Partition((3, 3, 2, 1))
    assert partition_of(w("5")) == Partition((5,))
    with pytest.raises(PreconditionError):
        partition_of(Word())
    with pytest.raises(WordFormatError):
        Partition((1, 2))


def test_transforms():
    assert reverse(w("2143")) == w("3412")
    assert prepend_one(w("22")) == w("122")
    assert plus_one(w("122")) == w("233")
    assert are_rearrangements(w("2143"), w("3412"))
    assert not are_rearrangements(w("122"), w("112"))


@given(patterns, words)
def test_em_set_indices_in_range(u, v):
    for i in em_set(u, v):
        assert 1 <= i <= len(v) - len(u) + 1
    assert occurrence_count(u, v) == len(em_set(u, v))


@given(patterns, words)
def test_plus_one_preserves_occurrences(u, v):
    assert occurrence_count(plus_one(u), plus_one(v)) == occurrence_count(u, v)


@given(words)
def test_transform_weights(u):
    assert reverse(reverse(u)) == u
    assert prepend_one(u).weight == u.weight + 1
    assert plus_one(u).weight == u.weight + len(u)


def test_dominance_is_a_partial_order():
    by_length = {}
    for n in range(9):
        for u in words_of_weight(n):
            by_length.setdefault(len(u), []).append(u)
    for group in by_length.values():
        for a in group:
            assert dominates(a, a)
            for b in group:
                if a != b and dominates(a, b):
                    assert not dominates(b, a)
                    for c in group:
                        if dominates(b, c):
                            assert dominates(a, c)


def test_bounded_compositions():
    assert list(bounded_compositions(4, 2, 1, 3)) == [(1, 3), (2, 2), (3, 1)]
    assert list(bounded_compositions(0, 0)) == [()]
    assert list(bounded_compositions(3, 0)) == []
    assert list(bounded_compositions(7, 2, 1, 3)) == []


def test_words_of_weight():
    assert list(words_of_weight(0)) == [Word()]
    assert list(words_of_weight(3)) == [w("3"), w("12"), w("21"), w("111")]
    for n in range(1, 10):
        assert sum(1 for _ in words_of_weight(n)) == 2 ** (n - 1)


def test_concatenation_stays_a_word():
    joined = w("12") + w("10,3")
    assert isinstance(joined, Word)
    assert joined == Word((1, 2, 10, 3))
    assert str(joined) == "1,2,10,3"
