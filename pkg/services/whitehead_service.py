"""
Whitehead Service - Substitutions and Reduction
===============================================

This module enumerates and applies Whitehead substitutions and runs the
greedy length-minimizing Whitehead reduction.

Features:
- Deterministic, duplicate-free enumeration of both move kinds
  (identity moves are never emitted)
- Application of a move to every word of a tangency set, followed by
  cyclic reduction and canonicalization
- Length change of every multiplier move at once from the Whitehead
  graph of the set (adjacent-letter-pair counts), without materializing
  the substituted words
- Greedy reduction that always takes the first move, in enumeration
  order, achieving the largest decrease

Enumeration order:
    permutations: itertools.permutations of the generators, then sign
        patterns (+ before -), identity dropped
    multipliers: a = x1, x1^-1, x2, x2^-1, ...; for each a, the actions of
        the other generators in itertools.product order over
        KEEP, RIGHT, LEFT, BOTH, the all-KEEP tuple dropped

Counts:
    permutations: 2^g * g! - 1
    multipliers:  2g * (4^(g-1) - 1)

Usage:
    moves = enumerate_moves(2, permutations=False)
    s_min, trace = reduce(make_tangency_set(2, words))
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from models.tangency_set import TangencySet
from models.whitehead_move import (
    MoveAction,
    MultiplierMove,
    PermutationMove,
    ReductionStep,
    ReductionTrace,
    WhiteheadMove,
)
from models.word import letter_key
from services.errors import IndexOutOfRange
from services.word_service import cyclic_reduce_codes, from_cyclic_words

# ---------------------------------------------------------------------------
# Logging Configuration
# ---------------------------------------------------------------------------
logger = logging.getLogger(__name__)


# =========================================================================
# Enumeration
# =========================================================================

@lru_cache(maxsize=None)
def permutation_moves(g: int) -> tuple[PermutationMove, ...]:
    """All non-identity signed permutations of g generators."""
    moves = []
    for perm in itertools.permutations(range(1, g + 1)):
        for signs in itertools.product((1, -1), repeat=g):
            move = PermutationMove(tuple(s * p for s, p in zip(signs, perm)))
            if not move.is_identity():
                moves.append(move)
    return tuple(moves)


@lru_cache(maxsize=None)
def multiplier_moves(g: int) -> tuple[MultiplierMove, ...]:
    """All non-identity multiplier moves on g generators."""
    moves = []
    for index in range(1, g + 1):
        for a in (index, -index):
            for others in itertools.product(list(MoveAction), repeat=g - 1):
                actions = others[:index - 1] + (MoveAction.KEEP,) + others[index - 1:]
                move = MultiplierMove(a, actions)
                if not move.is_identity():
                    moves.append(move)
    return tuple(moves)


def enumerate_moves(g: int, permutations: bool = True, multipliers: bool = True) -> list[WhiteheadMove]:
    """
    Enumerate Whitehead moves for genus g.

    Args:
        g: genus (>= 0)
        permutations: include type-1 signed permutations
        multipliers: include type-2 multiplier moves

    Returns:
        list: permutation moves first, then multiplier moves, each in the
        deterministic order documented in the module header
    """
    if g < 0:
        raise ValueError(f"genus must be >= 0, got {g}")
    moves: list[WhiteheadMove] = []
    if permutations:
        moves.extend(permutation_moves(g))
    if multipliers:
        moves.extend(multiplier_moves(g))
    return moves


# =========================================================================
# Application
# =========================================================================

def _check_move_genus(m: WhiteheadMove, s: TangencySet) -> None:
    for w in s.reduced:
        for c in w.codes:
            if abs(c) > m.genus:
                raise IndexOutOfRange(abs(c), m.genus)


def substitute_codes(m: WhiteheadMove, codes: Iterable[int]) -> list[int]:
    """Replace every letter by its image under m (no reduction)."""
    out: list[int] = []
    for c in codes:
        out.extend(m.substitute(c))
    return out


def apply(m: WhiteheadMove, s: TangencySet) -> TangencySet:
    """
    Apply a Whitehead move to every word of a tangency set.

    Args:
        m: the move
        s: tangency set whose letters all lie within the move's genus

    Returns:
        TangencySet: substituted words, cyclically reduced and canonical;
        the inessential-curve count is carried over unchanged

    Raises:
        IndexOutOfRange: a word mentions a generator above the move's genus
    """
    _check_move_genus(m, s)
    images = [substitute_codes(m, w.codes) for w in s.reduced]
    return from_cyclic_words(s.genus, images, inessential=s.inessential_count)


def apply_sequence(moves: Iterable[WhiteheadMove], s: TangencySet) -> TangencySet:
    for m in moves:
        s = apply(m, s)
    return s


# =========================================================================
# Length change
# =========================================================================

def whitehead_graph(s: TangencySet, genus: int) -> np.ndarray:
    """
    Symmetric edge-count matrix of the Whitehead graph of s.

    Vertices are letters (indexed by letter_key); every cyclically adjacent
    pair (x, y) in a word contributes one edge between x and y^-1.
    """
    n = 2 * genus
    graph = np.zeros((n, n), dtype=np.int64)
    us: list[int] = []
    vs: list[int] = []
    for w in s.reduced:
        codes = w.codes
        size = len(codes)
        for i, c in enumerate(codes):
            us.append(letter_key(c))
            vs.append(letter_key(-codes[(i + 1) % size]))
    if us:
        np.add.at(graph, (us, vs), 1)
        np.add.at(graph, (vs, us), 1)
    return graph


def _cut_vector(m: MultiplierMove) -> np.ndarray:
    """Indicator of the letters that end up on the multiplier's side of the cut."""
    cut = np.zeros(2 * m.genus, dtype=np.int64)
    cut[letter_key(m.multiplier)] = 1
    for i, action in enumerate(m.actions, start=1):
        if i == abs(m.multiplier):
            continue
        if action.appends:
            cut[letter_key(i)] = 1
        if action.prepends:
            cut[letter_key(-i)] = 1
    return cut


@dataclass(frozen=True)
class _MultiplierTable:
    moves: tuple[MultiplierMove, ...]
    cuts: np.ndarray
    multiplier_keys: np.ndarray


@lru_cache(maxsize=None)
def _multiplier_table(g: int) -> _MultiplierTable:
    moves = multiplier_moves(g)
    if moves:
        cuts = np.stack([_cut_vector(m) for m in moves])
    else:
        cuts = np.zeros((0, 2 * g), dtype=np.int64)
    keys = np.array([letter_key(m.multiplier) for m in moves], dtype=np.int64)
    return _MultiplierTable(moves, cuts, keys)


def _deltas_from_graph(graph: np.ndarray, cuts: np.ndarray, multiplier_keys: np.ndarray) -> np.ndarray:
    # |m(S)| - |S| = (edges crossing the cut) - deg(multiplier)
    crossing = ((cuts @ graph) * (1 - cuts)).sum(axis=1)
    degree = graph.sum(axis=1)
    return crossing - degree[multiplier_keys]


def multiplier_deltas(s: TangencySet) -> np.ndarray:
    """
    Length change of every multiplier move of genus s.genus, in enumeration order.

    Returns:
        np.ndarray: int64 vector aligned with multiplier_moves(s.genus)
    """
    table = _multiplier_table(s.genus)
    if not table.moves:
        return np.zeros(0, dtype=np.int64)
    graph = whitehead_graph(s, s.genus)
    return _deltas_from_graph(graph, table.cuts, table.multiplier_keys)


def length_delta(m: WhiteheadMove, s: TangencySet) -> int:
    """
    length(apply(m, s)) - length(s), computed from adjacent-letter-pair counts.

    Raises:
        IndexOutOfRange: as apply
    """
    _check_move_genus(m, s)
    if isinstance(m, PermutationMove):
        return 0
    graph = whitehead_graph(s, m.genus)
    cut = _cut_vector(m)[np.newaxis, :]
    keys = np.array([letter_key(m.multiplier)], dtype=np.int64)
    return int(_deltas_from_graph(graph, cut, keys)[0])


def naive_length_delta(m: WhiteheadMove, s: TangencySet) -> int:
    """Reference length change: apply the move, then subtract lengths."""
    return apply(m, s).length - s.length


# =========================================================================
# Reduction
# =========================================================================

def canonical(s: TangencySet) -> TangencySet:
    """Drop raw-word history: raw words become the canonical reductions."""
    return from_cyclic_words(s.genus, s.reduced, inessential=s.inessential_count)


def is_minimal(s: TangencySet) -> bool:
    """True iff no multiplier move strictly decreases the length of s."""
    deltas = multiplier_deltas(s)
    return deltas.size == 0 or int(deltas.min()) >= 0


def reduce(s: TangencySet) -> tuple[TangencySet, ReductionTrace]:
    """
    Greedy Whitehead reduction.

    At every step all multiplier moves are scored and the first one (in
    enumeration order) achieving the largest decrease is applied.
    Permutation moves never change length and are skipped.

    Args:
        s: tangency set

    Returns:
        tuple: (S_min, trace). S_min admits no length-decreasing move and is
        therefore a minimal form of s.
    """
    current = canonical(s)
    table = _multiplier_table(s.genus)
    steps: list[ReductionStep] = []
    while table.moves and current.length > 0:
        deltas = multiplier_deltas(current)
        best = int(np.argmin(deltas))
        delta = int(deltas[best])
        if delta >= 0:
            break
        move = table.moves[best]
        nxt = apply(move, current)
        if nxt.length != current.length + delta:
            raise AssertionError(
                f"length change mismatch for {move.describe()}: "
                f"predicted {delta}, got {nxt.length - current.length}"
            )
        logger.debug("reduce: %s (%d -> %d)", move.describe(), current.length, nxt.length)
        steps.append(ReductionStep(move, nxt, nxt.length))
        current = nxt
    logger.info("reduce: genus %d, length %d -> %d in %d steps",
                s.genus, s.length, current.length, len(steps))
    return current, ReductionTrace(s.length, tuple(steps))


# =========================================================================
# Symmetry (signed generator permutations)
# =========================================================================

StateKey = tuple[tuple[int, ...], ...]


def word_sort_key(codes: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(letter_key(c) for c in codes)


def state_sort_key(key: StateKey) -> tuple:
    return tuple(word_sort_key(w) for w in key)


def permute_state(move: PermutationMove, key: StateKey) -> StateKey:
    """Relabel every word of a state key by a signed permutation, re-canonicalized."""
    images = move.images
    relabeled = [cyclic_reduce_codes(images[c - 1] if c > 0 else -images[-c - 1] for c in codes)
                 for codes in key]
    return tuple(sorted(relabeled, key=word_sort_key))


def symmetry_key(key: StateKey, genus: int) -> StateKey:
    """Least state key over the orbit of signed generator permutations."""
    best = key
    best_order = state_sort_key(key)
    for move in permutation_moves(genus):
        candidate = permute_state(move, key)
        order = state_sort_key(candidate)
        if order < best_order:
            best, best_order = candidate, order
    return best


def symmetry_orbit(key: StateKey, genus: int) -> set[StateKey]:
    """All distinct state keys reachable from key by signed permutations."""
    orbit = {key}
    for move in permutation_moves(genus):
        orbit.add(permute_state(move, key))
    return orbit
