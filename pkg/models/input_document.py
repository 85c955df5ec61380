"""
Input Document Model
====================

A parsed tangency-data file.

Attributes:
    genus (int): value of the ``genus <g>`` header
    words (tuple[str, ...]): each word line as written (comment stripped)
    parsed (tuple[Word, ...]): the same lines decoded into words
    source (str): file name, ``<stdin>`` or ``<string>``
"""

from __future__ import annotations

from dataclasses import dataclass

from models.word import Word


@dataclass(frozen=True)
class InputDocument:
    genus: int
    words: tuple[str, ...] = ()
    parsed: tuple[Word, ...] = ()
    source: str = "<string>"

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "genus": self.genus,
            "words": list(self.words),
        }

    def __repr__(self) -> str:
        return f"InputDocument(source={self.source!r}, genus={self.genus}, words={len(self.words)})"
