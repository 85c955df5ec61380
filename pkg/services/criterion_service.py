"""
Criterion Service - Condition (A) and the Decision Pipeline
===========================================================

This module decides condition (A) on a set of words, runs the full
decision pipeline on raw t-curve words and translates the answer into
the dynamical verdict.

Condition (A):
    For every generator i, the letters x_i and x_i^-1 either do not occur
    at all in the reduced words, or each occurs exactly once.

Pipeline:
    1. cyclically reduce every raw word, drop the empty ones
    2. Whitehead-reduce the rest to a minimal form S_min
    3. check condition (A) on S_min

Special cases:
    - genus 0: the block is a ball; the criterion holds unconditionally
    - genus >= 1 with no t-curves at all: the criterion fails

Usage:
    v = verdict(2, [Word((1, 2, 1, 2, 2)), Word((-1, -2, -2)), Word((-1, -2))])
    v.criterion_holds      # True
"""

from __future__ import annotations

import logging
from typing import Iterable, Optional

from models.tangency_set import TangencySet
from models.verdict import OccurrenceReport, Verdict
from models.whitehead_move import ReductionTrace
from services.whitehead_service import canonical, reduce
from services.word_service import WordLike, make_tangency_set

# ---------------------------------------------------------------------------
# Logging Configuration
# ---------------------------------------------------------------------------
logger = logging.getLogger(__name__)


def occurrence_report(s: TangencySet) -> OccurrenceReport:
    """
    Count x_i and x_i^-1 over the cyclically reduced words of s.

    Returns:
        OccurrenceReport: one (pos, neg) pair per generator 1..genus
    """
    pos = [0] * s.genus
    neg = [0] * s.genus
    for w in s.reduced:
        for c in w.codes:
            if c > 0:
                pos[c - 1] += 1
            else:
                neg[-c - 1] += 1
    return OccurrenceReport(tuple(zip(pos, neg)))


def check_A(s: TangencySet) -> tuple[bool, OccurrenceReport]:
    """
    Decide condition (A).

    Args:
        s: tangency set (its reduced words are used)

    Returns:
        tuple: (True iff every generator's counts are (0, 0) or (1, 1), report)
    """
    report = occurrence_report(s)
    return report.satisfies_a(), report


def essential_count_fastpath(s: TangencySet) -> Optional[bool]:
    """
    Early answer from the number of essential curves.

    Under (A) the minimal form has total length at most 2g, and the number
    of nonempty words is invariant under moves and bounded by the length.
    More than 2g essential curves therefore rules the criterion out.

    Returns:
        False when the criterion must fail; None when no conclusion
    """
    if s.essential_count > 2 * s.genus:
        return False
    return None


def verdict_for_set(s: TangencySet) -> Verdict:
    """Run the decision pipeline on an already-built tangency set."""
    if s.genus == 0:
        base = canonical(s)
        return Verdict(0, s, base, ReductionTrace(0), occurrence_report(base), True)

    if not s.raw_words:
        logger.info("verdict: genus %d block without t-curves; criterion fails", s.genus)
        base = canonical(s)
        return Verdict(s.genus, s, base, ReductionTrace(0), occurrence_report(base), False)

    s_min, trace = reduce(s)
    holds, report = check_A(s_min)
    fast = essential_count_fastpath(s)
    if fast is not None and fast != holds:
        raise AssertionError(f"essential-count fast path disagrees with pipeline on {s!r}")
    logger.info("verdict: genus %d, length %d -> %d, criterion %s",
                s.genus, s.length, s_min.length, "holds" if holds else "fails")
    return Verdict(s.genus, s, s_min, trace, report, holds)


def verdict(genus: int, raw_words: Iterable[WordLike]) -> Verdict:
    """
    Decide the geometric criterion from raw t-curve words.

    Args:
        genus: handlebody genus
        raw_words: one word per t-curve, empty words for inessential curves

    Returns:
        Verdict: S_min, trace, occurrence report, criterion answer and
        interpretation

    Raises:
        IndexOutOfRange: a word mentions a generator above genus
    """
    return verdict_for_set(make_tangency_set(genus, raw_words))
