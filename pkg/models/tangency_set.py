"""
Tangency Set Model
==================

The genus of a handlebody together with the words read off its t-curves.

Attributes:
    genus (int): handlebody genus g (rank of the free alphabet)
    raw_words (tuple[Word, ...]): one word per t-curve, as read; empty
        words record inessential t-curves
    reduced (tuple[CyclicWord, ...]): the nonempty cyclic reductions of
        raw_words, with multiplicity, sorted by the letter order

Build instances with ``services.word_service.make_tangency_set`` (from raw
words) or ``services.word_service.from_cyclic_words``; both validate letter
indices against the genus and keep ``reduced`` canonical.
"""

from __future__ import annotations

from dataclasses import dataclass

from models.word import CyclicWord, Word


@dataclass(frozen=True)
class TangencySet:
    """
    Multiset of t-curve words on a genus-g handlebody.

    Equality compares genus, raw words and reduced words. Use ``state_key``
    to compare two sets only up to their cyclic reductions.
    """

    genus: int
    raw_words: tuple[Word, ...] = ()
    reduced: tuple[CyclicWord, ...] = ()

    @property
    def length(self) -> int:
        """Algebraic length: total length of the cyclically reduced words."""
        return sum(len(w) for w in self.reduced)

    @property
    def essential_count(self) -> int:
        return len(self.reduced)

    @property
    def inessential_count(self) -> int:
        return len(self.raw_words) - len(self.reduced)

    @property
    def state_key(self) -> tuple[tuple[int, ...], ...]:
        """Sorted multiset of canonical cyclic words; identifies a set up to reduction."""
        return tuple(w.codes for w in self.reduced)

    def to_dict(self) -> dict:
        """
        Convert the set to a JSON-ready dictionary.

        Returns:
            dict: genus, raw words and reduced words rendered as token strings
        """
        return {
            "genus": self.genus,
            "raw_words": [str(w) for w in self.raw_words],
            "reduced": [str(w) for w in self.reduced],
        }

    def __str__(self) -> str:
        return "{" + ", ".join(str(w) for w in self.reduced) + "}"

    def __repr__(self) -> str:
        return f"TangencySet(genus={self.genus}, reduced={self}, inessential={self.inessential_count})"
