"""
word.py: words over the positive integers and their sorted letter multisets.
"""
import operator
import re
from typing import Iterable, Union

from src.utils.exceptions import WordFormatError

_COMPACT = re.compile(r"^[1-9]+$")


class Word(tuple):
    """An immutable finite sequence of positive integers.

    Patterns and ambient words share this type. The empty word is legal.
    """

    def __new__(cls, entries: Iterable[int] = ()):
        try:
            entries = tuple(operator.index(entry) for entry in entries)
        except TypeError as ex:
            raise WordFormatError(f"word entries must be integers: {ex}") from ex
        for entry in entries:
            if entry < 1:
                raise WordFormatError(f"word entries must be positive, got {entry}")
        return super().__new__(cls, entries)

    @classmethod
    def parse(cls, text: Union[str, int, "Word"]) -> "Word":
        """Reads a compact digit string ("3123") or comma-separated integers ("10,1,2,3")."""
        if isinstance(text, Word):
            return text
        # hydra hands numeric overrides such as `pattern=122` over as ints
        if isinstance(text, int) and not isinstance(text, bool):
            text = str(text)
        if not isinstance(text, str):
            raise WordFormatError(f"cannot read a word from {text!r}")
        text = text.strip()
        if not text:
            return cls()
        if "," not in text:
            if not _COMPACT.match(text):
                raise WordFormatError(f"malformed word {text!r}")
            return cls(int(ch) for ch in text)
        try:
            entries = [int(part) for part in text.split(",")]
        except ValueError as ex:
            raise WordFormatError(f"malformed word {text!r}") from ex
        return cls(entries)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def weight(self) -> int:
        return sum(self)

    def __str__(self) -> str:
        if all(entry <= 9 for entry in self):
            return "".join(str(entry) for entry in self)
        return ",".join(str(entry) for entry in self)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __add__(self, other):
        return Word(tuple(self) + tuple(other))

    def __getitem__(self, item):
        result = super().__getitem__(item)
        if isinstance(item, slice):
            return Word(result)
        return result


class Partition(tuple):
    """Weakly decreasing tuple of positive parts."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        if any(part < 1 for part in parts):
            raise WordFormatError(f"partition parts must be positive, got {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise WordFormatError(f"partition parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"
