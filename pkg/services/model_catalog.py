"""
Model Catalog Service - Finite Model Enumeration
================================================

This module enumerates, per genus, the finite catalogue of essential
t-curve patterns compatible with the geometric criterion, as classes of
condition-(A) word sets up to signed generator permutations.

Construction:
    A condition-(A) word set on generators 1..k uses each of the 2k
    letters exactly once, so it is a splitting of those letters into
    cycles (one cycle per word) in which no letter is followed, cyclically,
    by its own inverse. Since any k-element subset of generators is a
    permutation image of {1..k}, it suffices to enumerate cycle systems
    on generators 1..k for k = 0..g and keep one representative per
    symmetry orbit. Each class is then Whitehead-reduced; classes that are
    not minimal record the class they reduce to.

Hand-drawn reference counts (nonempty models):
    genus 1: 1     genus 2: 4
    Word space has 5 nonempty classes at genus 2, of which 4 are
    Whitehead-minimal: {x1 x2, x1^-1 x2^-1} reduces to {x1, x1^-1}.
    The difference is reported by catalog_note.

Usage:
    classes = enumerate_models(2)
    catalog_note(2, classes)
"""

from __future__ import annotations

import logging
from typing import Iterator, Optional

import pandas as pd

from models.model_class import ModelClass
from models.word import CyclicWord, letter_key
from services.whitehead_service import StateKey, reduce, state_sort_key, symmetry_key, symmetry_orbit
from services.word_service import cyclic_reduce_codes, from_cyclic_words

# ---------------------------------------------------------------------------
# Logging Configuration
# ---------------------------------------------------------------------------
logger = logging.getLogger(__name__)

# ---------------------------------------------------------------------------
# Reference Counts
# ---------------------------------------------------------------------------
# nonempty models in the hand-drawn catalogue
HAND_DRAWN_MODEL_COUNTS = {1: 1, 2: 4}

# largest genus the workbench enumerates on demand
INTERACTIVE_MAX_GENUS = 3


def cycle_systems(letters: frozenset[int]) -> Iterator[list[tuple[int, ...]]]:
    """
    Every splitting of ``letters`` into cyclically reduced cycles.

    Each cycle starts at its least letter (letter order), so every system
    is produced exactly once.
    """
    if not letters:
        yield []
        return
    first = min(letters, key=letter_key)

    def extend(cycle: list[int], available: frozenset[int]) -> Iterator[list[tuple[int, ...]]]:
        if len(cycle) == 1 or cycle[-1] != -cycle[0]:
            for rest in cycle_systems(available):
                yield [tuple(cycle)] + rest
        for nxt in sorted(available, key=letter_key):
            if nxt != -cycle[-1]:
                yield from extend(cycle + [nxt], available - {nxt})

    yield from extend([first], letters - {first})


def _as_state(cycles: list[tuple[int, ...]]) -> StateKey:
    words = [cyclic_reduce_codes(c) for c in cycles]
    return tuple(sorted(words, key=lambda w: tuple(letter_key(c) for c in w)))


def _minimal_form(key: StateKey, g: int) -> Optional[StateKey]:
    """Orbit key of the Whitehead-minimal form, or None when key is already minimal."""
    s = from_cyclic_words(g, key)
    s_min, trace = reduce(s)
    if not trace.steps:
        return None
    return symmetry_key(s_min.state_key, g)


def enumerate_models(g: int) -> list[ModelClass]:
    """
    Enumerate condition-(A) word-set classes of genus g.

    Every class is listed, including those that are not Whitehead-minimal;
    those carry the class of the minimal form they reduce to.

    Args:
        g: genus (>= 0)

    Returns:
        list: the empty model first, then one class per symmetry orbit,
        ordered by generators used and then by canonical words
    """
    if g < 0:
        raise ValueError(f"genus must be >= 0, got {g}")
    classes: list[ModelClass] = [ModelClass(g, (), 1)]
    for k in range(1, g + 1):
        letters = frozenset(range(1, k + 1)) | frozenset(-i for i in range(1, k + 1))
        representatives: set[StateKey] = set()
        for cycles in cycle_systems(letters):
            representatives.add(symmetry_key(_as_state(cycles), g))
        for key in sorted(representatives, key=state_sort_key):
            orbit = symmetry_orbit(key, g)
            target = _minimal_form(key, g)
            classes.append(ModelClass(
                g, tuple(CyclicWord(w) for w in key), len(orbit),
                None if target is None else tuple(CyclicWord(w) for w in target),
            ))
        logger.debug("enumerate_models: genus %d, %d generators used -> %d classes",
                     g, k, len(representatives))
    return classes


def colourability_hint(m: ModelClass) -> bool:
    """
    Necessary condition for the curves to bound a two-colouring.

    The mod-2 sum of the words' abelianized classes must vanish: every
    generator occurs an even number of times in total (either sign).
    Condition (A) forces this, so on catalogue classes it always holds.
    """
    parity: dict[int, int] = {}
    for w in m.representative:
        for c in w.codes:
            parity[abs(c)] = parity.get(abs(c), 0) ^ 1
    return not any(parity.values())


def catalog_note(g: int, classes: list[ModelClass]) -> Optional[str]:
    """Comparison against the hand-drawn catalogue, when the counts differ."""
    reference = HAND_DRAWN_MODEL_COUNTS.get(g)
    nonempty = [m for m in classes if not m.is_empty]
    if reference is None or reference == len(nonempty):
        return None
    minimal = sum(1 for m in nonempty if m.minimal)
    reducible = "; ".join(f"{m} reduces to {ModelClass(g, m.reduces_to)}"
                          for m in nonempty if not m.minimal)
    note = (f"word-space enumeration gives {len(nonempty)} nonempty classes for genus {g}; "
            f"the hand-drawn catalogue shows {reference}. {minimal} of them are Whitehead-minimal")
    if reducible:
        note += f" ({reducible})"
    return note + ". All classes are listed."


def models_frame(classes: list[ModelClass]) -> pd.DataFrame:
    """Tabulate a catalogue for display or CSV export."""
    rows = []
    for number, m in enumerate(classes):
        row = {"class": number}
        row.update(m.to_dict())
        row["words"] = "; ".join(row["words"]) if row["words"] else "(empty)"
        row["reduces_to"] = "; ".join(row["reduces_to"]) if row["reduces_to"] else ""
        row["colourable"] = colourability_hint(m)
        rows.append(row)
    return pd.DataFrame(rows, columns=["class", "genus", "words", "curves", "generators_used",
                                       "orbit_size", "minimal", "reduces_to", "colourable"])
