from src.words import Word


def w(text: str) -> Word:
    return Word.parse(text)
