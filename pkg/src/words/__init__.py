from src.words.compositions import bounded_compositions, words_of_weight
from src.words.ops import (
    are_rearrangements,
    dominates,
    em_set,
    occurrence_count,
    partition_of,
    plus_one,
    prepend_one,
    reverse,
)
from src.words.word import Partition, Word
