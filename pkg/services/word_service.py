"""
Word Service - Exact Word Arithmetic
====================================

This module implements the arithmetic of words and cyclic words over a
rank-g free alphabet: inversion, free and cyclic reduction, canonical
rotations and algebraic length.

Features:
- Stack-based free reduction (linear time)
- Cyclic reduction by trimming cancelling end letters
- Canonical rotation = least rotation under x1 < x1^-1 < x2 < ...,
  found with the two-pointer minimum-representation scan (linear time)
- Construction and validation of TangencySet values

All functions are pure and operate on immutable values.

Usage:
    w = Word((1, 2, -1))
    c = cyclic_reduce(w)            # CyclicWord('x2')
    s = make_tangency_set(2, [w])
    length(s)                       # 1
"""

from __future__ import annotations

import logging
from typing import Iterable, Sequence, Union

from models.tangency_set import TangencySet
from models.word import CyclicWord, Word, letter_key
from services.errors import IndexOutOfRange

# ---------------------------------------------------------------------------
# Logging Configuration
# ---------------------------------------------------------------------------
logger = logging.getLogger(__name__)

WordLike = Union[Word, CyclicWord, Sequence[int]]


def _codes(w: WordLike) -> tuple[int, ...]:
    if isinstance(w, (Word, CyclicWord)):
        return w.codes
    return tuple(w)


# =========================================================================
# Single words
# =========================================================================

def invert(w: Word) -> Word:
    """
    Return the inverse word: the letters written backwards, each inverted.

    Args:
        w: Word to invert

    Returns:
        Word: W^-1 (same length as w)
    """
    return Word(tuple(-c for c in reversed(w.codes)))


def free_reduce_codes(codes: Iterable[int]) -> list[int]:
    """Cancel adjacent inverse pairs until none remain."""
    stack: list[int] = []
    for c in codes:
        if stack and stack[-1] == -c:
            stack.pop()
        else:
            stack.append(c)
    return stack


def least_rotation(keys: Sequence[int]) -> int:
    """
    Start index of the lexicographically least rotation of ``keys``.

    Two-pointer scan: i and j are candidate starts, k the length of their
    common prefix. Every mismatch discards k + 1 candidates.
    """
    n = len(keys)
    i, j, k = 0, 1, 0
    while i < n and j < n and k < n:
        a = keys[(i + k) % n]
        b = keys[(j + k) % n]
        if a == b:
            k += 1
            continue
        if a > b:
            i += k + 1
        else:
            j += k + 1
        if i == j:
            j += 1
        k = 0
    return min(i, j)


def cyclic_reduce_codes(codes: Iterable[int]) -> tuple[int, ...]:
    """Cyclically reduce a code sequence and return its canonical rotation."""
    reduced = free_reduce_codes(codes)
    lo, hi = 0, len(reduced)
    # a freely reduced word can only cancel at its two ends
    while hi - lo >= 2 and reduced[lo] == -reduced[hi - 1]:
        lo += 1
        hi -= 1
    core = reduced[lo:hi]
    if len(core) <= 1:
        return tuple(core)
    start = least_rotation([letter_key(c) for c in core])
    return tuple(core[start:] + core[:start])


def cyclic_reduce(w: WordLike) -> CyclicWord:
    """
    Cyclically reduce a word and store it in canonical rotation.

    Args:
        w: Word, CyclicWord or raw code sequence

    Returns:
        CyclicWord: no cancelling neighbours (including last/first), least
        rotation under the letter order. Idempotent.
    """
    return CyclicWord(cyclic_reduce_codes(_codes(w)))


def cyclic_equal(u: CyclicWord, v: CyclicWord) -> bool:
    """True iff u and v are the same cyclic word (compares canonical rotations)."""
    return u.codes == v.codes


def is_cyclically_reduced(w: WordLike) -> bool:
    codes = _codes(w)
    n = len(codes)
    if n == 1:
        return True
    return all(codes[i] != -codes[(i + 1) % n] for i in range(n))


# =========================================================================
# Sets of words
# =========================================================================

def length(s: TangencySet) -> int:
    """
    Algebraic length of a tangency set.

    Returns:
        int: sum of the lengths of the cyclically reduced nonempty words
    """
    return s.length


def check_indices(w: WordLike, genus: int) -> None:
    """Raise IndexOutOfRange if the word mentions a generator above genus."""
    for c in _codes(w):
        if abs(c) > genus:
            raise IndexOutOfRange(abs(c), genus)


def sort_cyclic(words: Iterable[CyclicWord]) -> tuple[CyclicWord, ...]:
    """Canonical multiset order: lexicographic in the letter order."""
    return tuple(sorted(words, key=lambda w: w.sort_key))


def make_tangency_set(genus: int, raw_words: Iterable[WordLike]) -> TangencySet:
    """
    Build a TangencySet from raw t-curve words.

    Args:
        genus: handlebody genus (>= 0)
        raw_words: one word per t-curve; empty words are inessential curves

    Returns:
        TangencySet: raw words kept as given, reduced = nonempty cyclic
        reductions in canonical order

    Raises:
        IndexOutOfRange: a word mentions a generator above genus
        ValueError: negative genus
    """
    if genus < 0:
        raise ValueError(f"genus must be >= 0, got {genus}")
    raws = tuple(w if isinstance(w, Word) else Word(_codes(w)) for w in raw_words)
    for w in raws:
        check_indices(w, genus)
    reduced = (cyclic_reduce(w) for w in raws)
    return TangencySet(genus, raws, sort_cyclic(c for c in reduced if not c.is_empty()))


def from_cyclic_words(genus: int, words: Iterable[WordLike], inessential: int = 0) -> TangencySet:
    """
    Build a TangencySet whose raw words are the reductions themselves.

    Args:
        genus: handlebody genus
        words: words to reduce; ones reducing to 1 count as inessential
        inessential: number of additional empty raw words to carry

    Returns:
        TangencySet: raw words = canonical nonempty reductions followed by
        the empty words
    """
    reduced = [cyclic_reduce(w) for w in words]
    for c in reduced:
        check_indices(c, genus)
    essential = sort_cyclic(c for c in reduced if not c.is_empty())
    empties = inessential + sum(1 for c in reduced if c.is_empty())
    raws = tuple(c.as_word() for c in essential) + (Word(),) * empties
    return TangencySet(genus, raws, essential)


def same_cyclic_multiset(s: TangencySet, t: TangencySet) -> bool:
    """True iff both sets have the same reduced multiset of cyclic words."""
    return s.state_key == t.state_key
