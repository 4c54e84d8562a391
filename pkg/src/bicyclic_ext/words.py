"""Normal forms for words in the bicyclic monoid ``<p, q | pq = 1>``.

Every word equals a unique ``q^k p^l``, identified with the pair ``(k, l)``.
"""

from __future__ import annotations

from functools import reduce

from .semigroup import multiply_bicyclic

LETTERS = {"p": (0, 1), "q": (1, 0)}


class WordError(ValueError):
    def __init__(self, word: str, position: int):
        self.word = word
        self.position = position
        super().__init__(
            f"invalid letter {word[position]!r} at position {position}; expected 'p' or 'q'"
        )


def normalize_word(word: str) -> tuple[int, int]:
    """Fold the word left to right with the bicyclic product.

    >>> normalize_word("pqq")
    (1, 0)
    """
    for pos, ch in enumerate(word):
        if ch not in LETTERS:
            raise WordError(word, pos)
    return reduce(multiply_bicyclic, (LETTERS[ch] for ch in word), (0, 0))


def normal_word(pair: tuple[int, int]) -> str:
    k, l = pair
    return "q" * k + "p" * l
