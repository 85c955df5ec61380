"""
Model Class
===========

One entry of the finite catalogue of essential t-curve patterns that
satisfy the geometric criterion on a genus-g handlebody.

Attributes:
    genus (int): handlebody genus
    representative (tuple[CyclicWord, ...]): canonical orbit representative;
        every generator pair is used not at all or exactly once each
    orbit_size (int): number of distinct word sets in its orbit under
        signed generator permutations
    reduces_to (tuple[CyclicWord, ...] | None): orbit representative of the
        Whitehead-minimal form, or None when the class is already minimal
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from models.word import CyclicWord


@dataclass(frozen=True)
class ModelClass:
    genus: int
    representative: tuple[CyclicWord, ...]
    orbit_size: int = 1
    reduces_to: Optional[tuple[CyclicWord, ...]] = None

    @property
    def is_empty(self) -> bool:
        return not self.representative

    @property
    def minimal(self) -> bool:
        return self.reduces_to is None

    @property
    def generators_used(self) -> int:
        return sum(len(w) for w in self.representative) // 2

    @property
    def curve_count(self) -> int:
        return len(self.representative)

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "words": [str(w) for w in self.representative],
            "curves": self.curve_count,
            "generators_used": self.generators_used,
            "orbit_size": self.orbit_size,
            "minimal": self.minimal,
            "reduces_to": None if self.reduces_to is None else [str(w) for w in self.reduces_to],
        }

    def __str__(self) -> str:
        return "{" + ", ".join(str(w) for w in self.representative) + "}"

    def __repr__(self) -> str:
        return (f"ModelClass(genus={self.genus}, representative={self}, "
                f"orbit_size={self.orbit_size}, minimal={self.minimal})")
