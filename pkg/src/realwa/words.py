"""Alphabets and words.

Internally a word is a tuple of letter indices into its alphabet.  The
public functions also accept letter names, either as a sequence or as a
string spelled the way the command line spells words.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence, Union

from .errors import AlphabetError

EMPTY_WORD_SPELLING = "@"

Word = tuple
WordLike = Union[str, Sequence[int], Sequence[str]]


@dataclass(frozen=True)
class Alphabet:
    letters: tuple

    def __init__(self, letters):
        if isinstance(letters, str):
            raise AlphabetError("pass the letters as a list, not a single string")
        letters = tuple(letters)
        if not letters:
            raise AlphabetError("alphabet is empty")
        for a in letters:
            if not isinstance(a, str) or not a:
                raise AlphabetError(f"letter {a!r} is not a non-empty string")
            if a == EMPTY_WORD_SPELLING:
                raise AlphabetError(f"{EMPTY_WORD_SPELLING!r} is reserved for the empty word")
        dupes = sorted({a for a in letters if letters.count(a) > 1})
        if dupes:
            raise AlphabetError(f"duplicate letters: {', '.join(dupes)}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def index(self, letter: str) -> int:
        try:
            return self.letters.index(letter)
        except ValueError:
            raise AlphabetError(f"unknown letter {letter!r}") from None

    @property
    def single_char(self) -> bool:
        return all(len(a) == 1 for a in self.letters)

    def encode(self, word: WordLike) -> Word:
        """Normalise any accepted word spelling to a tuple of letter indices."""
        if isinstance(word, str):
            return self.parse(word)
        out = []
        k = len(self.letters)
        for a in word:
            if isinstance(a, bool):
                raise AlphabetError(f"unknown letter {a!r}")
            if isinstance(a, int):
                if not 0 <= a < k:
                    raise AlphabetError(f"unknown letter index {a}")
                out.append(a)
            else:
                out.append(self.index(a))
        return tuple(out)

    def parse(self, text: str) -> Word:
        if text == EMPTY_WORD_SPELLING or text == "":
            return ()
        if self.single_char:
            return tuple(self.index(c) for c in text)
        return tuple(self.index(part.strip()) for part in text.split(","))

    def format(self, word: Word) -> str:
        if not word:
            return EMPTY_WORD_SPELLING
        sep = "" if self.single_char else ","
        return sep.join(self.letters[i] for i in word)


def enumerate_words(alphabet: Alphabet, max_len: int) -> Iterator[Word]:
    """All words of length <= max_len, shorter first, then in alphabet order."""
    k = len(alphabet)
    for length in range(max_len + 1):
        yield from product(range(k), repeat=length)
