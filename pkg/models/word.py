"""
Word Models
===========

Letters and words over the alphabet x1, x1^-1, ..., xg, xg^-1.

Internally a letter is stored as a signed integer code: ``i`` stands for
x_i and ``-i`` for x_i^-1. Words keep a tuple of codes, which keeps
substitution and reduction cheap on long inputs; the ``Letter`` class is
the typed view of one code.

Letter order (used for canonical rotations and sorting):
    x1 < x1^-1 < x2 < x2^-1 < ...

Attributes:
    Letter.index (int): generator number i (1 <= i <= g)
    Letter.sign (int): +1 for x_i, -1 for x_i^-1
    Word.codes (tuple[int, ...]): letters in reading order (empty = word 1)
    CyclicWord.codes (tuple[int, ...]): cyclically reduced letters in
        canonical (least) rotation
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


def letter_key(code: int) -> int:
    """Position of a letter code in the total letter order (x1=0, x1^-1=1, ...)."""
    return 2 * (abs(code) - 1) + (1 if code < 0 else 0)


def format_code(code: int) -> str:
    """Render one letter code as ``x<k>`` or ``x<k>^-1``."""
    if code > 0:
        return f"x{code}"
    return f"x{-code}^-1"


def format_codes(codes: Iterable[int]) -> str:
    """Render a code sequence as space-separated tokens, ``1`` when empty."""
    tokens = [format_code(c) for c in codes]
    return " ".join(tokens) if tokens else "1"


@dataclass(frozen=True)
class Letter:
    """
    One generator symbol x_i or its inverse.

    Ordering follows the letter order x1 < x1^-1 < x2 < ..., so sorted()
    on letters agrees with the canonical rotation order.
    """

    index: int
    sign: int = 1

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"letter index must be >= 1, got {self.index}")
        if self.sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {self.sign}")

    @classmethod
    def from_code(cls, code: int) -> "Letter":
        """Build a Letter from its signed integer code."""
        if code == 0:
            raise ValueError("0 is not a letter code")
        return cls(abs(code), 1 if code > 0 else -1)

    @property
    def code(self) -> int:
        return self.sign * self.index

    @property
    def key(self) -> int:
        return letter_key(self.code)

    def inverse(self) -> "Letter":
        return Letter(self.index, -self.sign)

    def __lt__(self, other: "Letter") -> bool:
        return self.key < other.key

    def __str__(self) -> str:
        return format_code(self.code)


@dataclass(frozen=True)
class Word:
    """
    A finite sequence of letters, possibly empty (the word 1).

    Words are not reduced on construction: a raw word read off a t-curve is
    kept exactly as read.
    """

    codes: tuple[int, ...] = ()

    @classmethod
    def from_letters(cls, letters: Iterable[Letter]) -> "Word":
        return cls(tuple(letter.code for letter in letters))

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(Letter.from_code(c) for c in self.codes)

    @property
    def max_index(self) -> int:
        """Largest generator index mentioned (0 for the empty word)."""
        return max((abs(c) for c in self.codes), default=0)

    def is_empty(self) -> bool:
        return not self.codes

    def __len__(self) -> int:
        return len(self.codes)

    def __str__(self) -> str:
        return format_codes(self.codes)

    def __repr__(self) -> str:
        return f"Word('{self}')"


@dataclass(frozen=True)
class CyclicWord:
    """
    A cyclically reduced word considered up to rotation.

    Instances are produced by ``services.word_service.cyclic_reduce``,
    which guarantees the stored rotation is the canonical one. Two
    CyclicWords are equal exactly when they are the same cyclic word.
    """

    codes: tuple[int, ...] = ()

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(Letter.from_code(c) for c in self.codes)

    @property
    def sort_key(self) -> tuple[int, ...]:
        return tuple(letter_key(c) for c in self.codes)

    def is_empty(self) -> bool:
        return not self.codes

    def as_word(self) -> Word:
        return Word(self.codes)

    def __len__(self) -> int:
        return len(self.codes)

    def __str__(self) -> str:
        return format_codes(self.codes)

    def __repr__(self) -> str:
        return f"CyclicWord('{self}')"
