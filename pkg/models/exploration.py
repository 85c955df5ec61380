"""
Exploration Model
=================

Result of a brute-force breadth-first search over Whitehead-equivalent
tangency sets, and the certification built on it.

Attributes:
    global_min_length (int): smallest algebraic length seen
    minimal_forms (tuple[TangencySet, ...]): every visited state attaining
        it, sorted by state key
    visited_count (int): number of distinct states visited
    length_cap (int): states longer than this were never entered
    modulo_symmetry (bool): whether states were identified up to signed
        generator permutations
"""

from __future__ import annotations

from dataclasses import dataclass

from models.tangency_set import TangencySet


@dataclass(frozen=True)
class Exploration:
    global_min_length: int
    minimal_forms: tuple[TangencySet, ...]
    visited_count: int
    length_cap: int
    modulo_symmetry: bool = False

    @property
    def minimal_keys(self) -> frozenset:
        return frozenset(s.state_key for s in self.minimal_forms)

    def to_dict(self) -> dict:
        return {
            "global_min_length": self.global_min_length,
            "minimal_forms": [[str(w) for w in s.reduced] for s in self.minimal_forms],
            "visited_count": self.visited_count,
            "length_cap": self.length_cap,
            "modulo_symmetry": self.modulo_symmetry,
        }

    def __repr__(self) -> str:
        return (f"Exploration(min={self.global_min_length}, forms={len(self.minimal_forms)}, "
                f"visited={self.visited_count})")


@dataclass(frozen=True)
class Certification:
    """Greedy reduction checked against a brute-force exploration."""

    greedy_length: int
    exploration: Exploration
    forms_agree: bool
    connected: bool

    @property
    def certified(self) -> bool:
        return self.greedy_length == self.exploration.global_min_length

    @property
    def passed(self) -> bool:
        return self.certified and self.forms_agree and self.connected

    def to_dict(self) -> dict:
        return {
            "greedy_length": self.greedy_length,
            "oracle_length": self.exploration.global_min_length,
            "certified": self.certified,
            "forms_agree": self.forms_agree,
            "connected": self.connected,
            "exploration": self.exploration.to_dict(),
        }
