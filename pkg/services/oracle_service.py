"""
Oracle Service - Brute-Force Certification
==========================================

This module certifies, at desk scale, the claims the greedy reduction
relies on: that a set admitting no length-decreasing move is globally
minimal, that all minimal forms agree on condition (A), and that minimal
forms are connected by length-preserving moves.

Features:
- Breadth-first closure of a tangency set under all Whitehead moves,
  bounded by a length cap and a node budget
- Optional identification of states up to signed generator permutations
  (same global minimum, far fewer states)
- Greedy-versus-oracle certification and minimal-level connectivity
- Seeded random certification campaigns reported as pandas DataFrames

Configuration:
    node budget: argument, then TANGENCY_NODE_BUDGET, then DEFAULT_NODE_BUDGET
    threads:     argument, then TANGENCY_THREADS, then DEFAULT_THREADS

Usage:
    exp = bfs_explore(s, length_cap=s.length)
    certify_greedy(s)                    # True
    certify(s).passed                    # True
    df = run_campaign(count=200, seed=7)
"""

from __future__ import annotations

import logging
import os
import random
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

import numpy as np
import pandas as pd

from models.exploration import Certification, Exploration
from models.tangency_set import TangencySet
from services.criterion_service import check_A
from services.errors import BudgetExceeded
from services.whitehead_service import (
    StateKey,
    apply,
    canonical,
    multiplier_deltas,
    multiplier_moves,
    permutation_moves,
    reduce,
    state_sort_key,
    symmetry_key,
)
from services.word_service import from_cyclic_words, make_tangency_set

# ---------------------------------------------------------------------------
# Logging Configuration
# ---------------------------------------------------------------------------
logger = logging.getLogger(__name__)

# ---------------------------------------------------------------------------
# Default Settings
# ---------------------------------------------------------------------------
DEFAULT_NODE_BUDGET = 1_000_000
DEFAULT_THREADS = 1
DEFAULT_CAMPAIGN_SIZE = 200
DEFAULT_MAX_GENUS = 3
DEFAULT_MAX_LENGTH = 8
CONNECTIVITY_HEADROOM = 2


def _env_int(name: str) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        logger.warning("%s=%r is not an integer; ignored", name, raw)
        return None
    if value < 1:
        logger.warning("%s=%r must be positive; ignored", name, raw)
        return None
    return value


def resolve_node_budget(budget: Optional[int] = None) -> int:
    """Node budget from the argument, else TANGENCY_NODE_BUDGET, else the default."""
    if budget is not None:
        return budget
    return _env_int("TANGENCY_NODE_BUDGET") or DEFAULT_NODE_BUDGET


def resolve_threads(threads: Optional[int] = None) -> int:
    """Worker count from the argument, else TANGENCY_THREADS, else the default."""
    if threads is not None:
        return max(1, threads)
    return _env_int("TANGENCY_THREADS") or DEFAULT_THREADS


# =========================================================================
# State reconstruction
# =========================================================================

def _state_from_key(key: StateKey, genus: int, inessential: int) -> TangencySet:
    return from_cyclic_words(genus, key, inessential=inessential)


# =========================================================================
# Exploration
# =========================================================================

def _neighbours(state: TangencySet, length_cap: int, include_permutations: bool,
                length_preserving: bool = False):
    if include_permutations:
        for move in permutation_moves(state.genus):
            yield apply(move, state)
    moves = multiplier_moves(state.genus)
    if not moves:
        return
    deltas = multiplier_deltas(state)
    if length_preserving:
        candidates = np.flatnonzero(deltas == 0)
    else:
        candidates = np.flatnonzero(state.length + deltas <= length_cap)
    for idx in candidates:
        yield apply(moves[int(idx)], state)


def bfs_explore(s: TangencySet, length_cap: Optional[int] = None,
                node_budget: Optional[int] = None, modulo_symmetry: bool = False) -> Exploration:
    """
    Breadth-first closure of s under all Whitehead moves within a length cap.

    Args:
        s: starting tangency set
        length_cap: largest length a visited state may have (default: s.length)
        node_budget: most states to visit before giving up
        modulo_symmetry: identify states related by signed permutations

    Returns:
        Exploration: global minimum, every minimal state, visited count

    Raises:
        ValueError: s is longer than length_cap or the budget is not positive
        BudgetExceeded: more than node_budget states were reached
    """
    cap = s.length if length_cap is None else length_cap
    budget = resolve_node_budget(node_budget)
    if budget <= 0:
        raise ValueError(f"node budget must be positive, got {budget}")
    if s.length > cap:
        raise ValueError(f"start length {s.length} exceeds length cap {cap}")

    genus = s.genus
    inessential = s.inessential_count

    def key_of(state: TangencySet) -> StateKey:
        return symmetry_key(state.state_key, genus) if modulo_symmetry else state.state_key

    start_key = key_of(canonical(s))
    start = _state_from_key(start_key, genus, inessential)
    seen: set[StateKey] = {start_key}
    queue = deque([start])
    best = start.length
    minimal: dict[StateKey, TangencySet] = {start_key: start}

    while queue:
        state = queue.popleft()
        for nxt in _neighbours(state, cap, include_permutations=not modulo_symmetry):
            if nxt.length > cap:
                continue
            key = key_of(nxt)
            if key in seen:
                continue
            seen.add(key)
            if len(seen) > budget:
                logger.warning("bfs_explore: budget %d exhausted from %s", budget, s)
                raise BudgetExceeded(budget, len(seen))
            if modulo_symmetry:
                nxt = _state_from_key(key, genus, inessential)
            if nxt.length < best:
                best = nxt.length
                minimal = {}
            if nxt.length == best:
                minimal[key] = nxt
            queue.append(nxt)

    forms = tuple(minimal[k] for k in sorted(minimal, key=state_sort_key))
    logger.debug("bfs_explore: %d states, min length %d, %d minimal forms",
                 len(seen), best, len(forms))
    return Exploration(best, forms, len(seen), cap, modulo_symmetry)


def certify_greedy(s: TangencySet, length_cap: Optional[int] = None,
                   node_budget: Optional[int] = None, modulo_symmetry: bool = False) -> bool:
    """
    True iff the greedy reduction reaches the oracle's global minimum.

    Raises:
        BudgetExceeded: propagated from bfs_explore
    """
    s_min, _ = reduce(s)
    exploration = bfs_explore(s, length_cap, node_budget, modulo_symmetry)
    return s_min.length == exploration.global_min_length


def minimal_forms_agree(exploration: Exploration) -> bool:
    """True iff every minimal form gives the same condition (A) answer."""
    answers = {check_A(form)[0] for form in exploration.minimal_forms}
    return len(answers) <= 1


def minimal_level_connectivity(s: TangencySet, node_budget: Optional[int] = None,
                               modulo_symmetry: bool = False) -> bool:
    """
    True iff all minimal forms of s are joined by length-preserving moves.

    Minimal forms are collected by exploring from the greedy minimum with
    a cap of min + 2; connectivity is then checked using only moves that
    keep the length at the minimum.

    Raises:
        BudgetExceeded: propagated from bfs_explore
    """
    s_min, _ = reduce(s)
    level = s_min.length
    exploration = bfs_explore(s_min, level + CONNECTIVITY_HEADROOM, node_budget, modulo_symmetry)
    forms = exploration.minimal_keys
    if len(forms) <= 1:
        return True

    genus = s.genus

    def key_of(state: TangencySet) -> StateKey:
        return symmetry_key(state.state_key, genus) if modulo_symmetry else state.state_key

    first = exploration.minimal_forms[0]
    reached = {key_of(first)}
    queue = deque([first])
    while queue:
        state = queue.popleft()
        for nxt in _neighbours(state, level, include_permutations=not modulo_symmetry,
                               length_preserving=True):
            key = key_of(nxt)
            if key not in reached:
                reached.add(key)
                queue.append(nxt)
    return forms <= reached


def certify(s: TangencySet, length_cap: Optional[int] = None, node_budget: Optional[int] = None,
            modulo_symmetry: bool = False) -> Certification:
    """
    Full certification report for one set: greedy versus oracle minimum,
    minimal-form agreement on condition (A) and minimal-level connectivity.

    Raises:
        BudgetExceeded: propagated from bfs_explore
    """
    s_min, _ = reduce(s)
    exploration = bfs_explore(s, length_cap, node_budget, modulo_symmetry)
    connected = minimal_level_connectivity(s, node_budget, modulo_symmetry)
    return Certification(s_min.length, exploration, minimal_forms_agree(exploration), connected)


# =========================================================================
# Campaigns
# =========================================================================

def random_tangency_set(rng: random.Random, genus: int, max_length: int,
                        max_words: int = 3) -> TangencySet:
    """Random raw word set on genus generators, total raw length <= max_length."""
    remaining = rng.randint(1, max_length)
    words = []
    for i in range(rng.randint(1, max_words)):
        if remaining <= 0:
            break
        size = remaining if i == max_words - 1 else rng.randint(1, remaining)
        remaining -= size
        words.append([rng.choice((1, -1)) * rng.randint(1, genus) for _ in range(size)])
    return make_tangency_set(genus, words)


def _campaign_row(case: tuple[int, TangencySet], node_budget: Optional[int]) -> dict:
    number, s = case
    s_min, trace = reduce(s)
    cert = certify(s, s.length, node_budget, modulo_symmetry=True)
    return {
        "case": number,
        "genus": s.genus,
        "words": "; ".join(str(w) for w in s.reduced) or "1",
        "length": s.length,
        "greedy_length": s_min.length,
        "oracle_length": cert.exploration.global_min_length,
        "certified": cert.certified,
        "minimal_forms": len(cert.exploration.minimal_forms),
        "forms_agree": cert.forms_agree,
        "connected": cert.connected,
        "criterion_holds": check_A(s_min)[0],
        "steps": len(trace),
        "visited": cert.exploration.visited_count,
    }


def run_campaign(count: int = DEFAULT_CAMPAIGN_SIZE, max_genus: int = DEFAULT_MAX_GENUS,
                 max_length: int = DEFAULT_MAX_LENGTH, seed: int = 0,
                 threads: Optional[int] = None, node_budget: Optional[int] = None) -> pd.DataFrame:
    """
    Certify the greedy reduction on seeded random word sets.

    Args:
        count: number of random instances
        max_genus: genera are drawn from 1..max_genus
        max_length: raw total length bound per instance
        seed: random seed; identical arguments give identical tables
        threads: worker threads (rows keep case order regardless)
        node_budget: per-exploration node budget

    Returns:
        pd.DataFrame: one row per case with certification columns

    Raises:
        BudgetExceeded: an instance was too large for its budget
    """
    rng = random.Random(seed)
    cases = [(i, random_tangency_set(rng, rng.randint(1, max_genus), max_length))
             for i in range(count)]
    workers = resolve_threads(threads)
    logger.info("campaign: %d cases, genus <= %d, length <= %d, seed %d, %d threads",
                count, max_genus, max_length, seed, workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows = list(pool.map(lambda case: _campaign_row(case, node_budget), cases))
    df = pd.DataFrame(rows, columns=[
        "case", "genus", "words", "length", "greedy_length", "oracle_length", "certified",
        "minimal_forms", "forms_agree", "connected", "criterion_holds", "steps", "visited",
    ])
    failures = int((~(df["certified"] & df["forms_agree"] & df["connected"])).sum()) if len(df) else 0
    logger.info("campaign: %d/%d cases certified", len(df) - failures, len(df))
    return df


def campaign_passed(df: pd.DataFrame) -> bool:
    """True iff every campaign row certified, agreed and was connected."""
    if df.empty:
        return True
    return bool((df["certified"] & df["forms_agree"] & df["connected"]).all())
